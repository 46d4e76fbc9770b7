#include "twoslit/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace twoslit {
namespace oracle {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Tighter envelope cutoff than the integration tolerance so truncated tails
// never dominate the reported error.
double envelope_threshold(const QuadratureSpec& spec) {
  return std::max(spec.truncation_threshold * 1e-2, 1e-300);
}
}  // namespace

std::complex<double> fourier_packet(double x, double tau, double sigma,
                                    const QuadratureSpec& spec) {
  const double radius = gaussian_truncation_radius(sigma, envelope_threshold(spec));
  const auto integrand = [&](double k) {
    const std::complex<double> phase(0.0, k * x - 0.5 * k * k * tau);
    return mode_amplitude(k, sigma) * std::exp(phase);
  };
  return integrate_1d(integrand, -radius, radius, spec).value / (2.0 * kPi);
}

std::complex<double> slit_amplitude_by_quadrature(double x, const PacketParams& p,
                                                  const SlitGeometry& g, Slit slit,
                                                  const QuadratureSpec& spec) {
  p.validate();
  g.validate();
  const double center = (slit == Slit::A) ? g.x0 : -g.x0;
  const double radius = gaussian_truncation_radius(g.b, envelope_threshold(spec));
  const auto integrand = [&](double xs) {
    const double w = (xs - center) / g.b;
    return std::exp(-0.5 * w * w) * propagator_kernel(x, xs, p.tau_d) *
           free_packet(xs, p.tau_s, p.sigma);
  };
  return integrate_1d(integrand, center - radius, center + radius, spec).value;
}

double state_truncation_radius(const BeamCoefficients& c, double threshold) {
  if (!(c.alpha > 0.0)) throw invalid_parameter_error("alpha must be positive");
  if (!(threshold > 0.0) || !(threshold < 1.0))
    throw invalid_parameter_error("threshold must lie in (0, 1)");
  // Solve alpha R^2 - |delta| R = log(1/threshold).
  const double log_inv = std::log(1.0 / threshold);
  const double ad = std::abs(c.delta);
  return (ad + std::sqrt(ad * ad + 4.0 * c.alpha * log_inv)) / (2.0 * c.alpha);
}

double state_norm_by_quadrature(const DiffractedState& s, const QuadratureSpec& spec) {
  const double radius = state_truncation_radius(s.coeffs, envelope_threshold(spec));
  const auto integrand = [&](double x) {
    return std::complex<double>(std::norm(s.amplitude(x)), 0.0);
  };
  return integrate_1d(integrand, -radius, radius, spec).value.real();
}

std::complex<double> overlap_by_quadrature(const DiffractedState& a,
                                           const DiffractedState& b,
                                           const QuadratureSpec& spec) {
  const double radius = std::max(state_truncation_radius(a.coeffs, envelope_threshold(spec)),
                                 state_truncation_radius(b.coeffs, envelope_threshold(spec)));
  const auto integrand = [&](double x) { return std::conj(a.amplitude(x)) * b.amplitude(x); };
  return integrate_1d(integrand, -radius, radius, spec).value;
}

double density_normalization_2d(const TwoParticleSystem& sys, Statistics stat,
                                const QuadratureSpec& spec) {
  const double radius = std::max(state_truncation_radius(sys.psi.coeffs, envelope_threshold(spec)),
                                 state_truncation_radius(sys.phi.coeffs, envelope_threshold(spec)));
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 1e-2;
  inner.rel_tol = spec.rel_tol * 1e-2;
  const double n = joint_norm(sys.overlap_sq, stat);

  const auto outer_integrand = [&](double x) {
    const std::complex<double> psi_x = sys.psi.amplitude(x);
    const std::complex<double> phi_x = sys.phi.amplitude(x);
    const auto inner_integrand = [&](double y) {
      const std::complex<double> psi_y = sys.psi.amplitude(y);
      const std::complex<double> phi_y = sys.phi.amplitude(y);
      double value;
      if (stat == Statistics::distinguishable) {
        value = 0.5 * (std::norm(psi_x * phi_y) + std::norm(psi_y * phi_x));
      } else {
        const std::complex<double> amp = (stat == Statistics::boson)
                                             ? psi_x * phi_y + psi_y * phi_x
                                             : psi_x * phi_y - psi_y * phi_x;
        value = n * n * std::norm(amp);
      }
      return std::complex<double>(value, 0.0);
    };
    return integrate_1d(inner_integrand, -radius, radius, inner).value;
  };
  return integrate_1d(outer_integrand, -radius, radius, spec).value.real();
}

double joint_density_by_exchange_expansion(double x, double y, const TwoParticleSystem& sys,
                                           Statistics stat) {
  // Normalization-scaled beams: psi_i = N_psi * beam_i, etc.
  const std::complex<double> psi_x[2] = {sys.psi.norm * sys.psi.beam(x, Slit::A),
                                         sys.psi.norm * sys.psi.beam(x, Slit::B)};
  const std::complex<double> psi_y[2] = {sys.psi.norm * sys.psi.beam(y, Slit::A),
                                         sys.psi.norm * sys.psi.beam(y, Slit::B)};
  const std::complex<double> phi_x[2] = {sys.phi.norm * sys.phi.beam(x, Slit::A),
                                         sys.phi.norm * sys.phi.beam(x, Slit::B)};
  const std::complex<double> phi_y[2] = {sys.phi.norm * sys.phi.beam(y, Slit::A),
                                         sys.phi.norm * sys.phi.beam(y, Slit::B)};

  const std::complex<double> full_psi_x = psi_x[0] + psi_x[1];
  const std::complex<double> full_psi_y = psi_y[0] + psi_y[1];
  const std::complex<double> full_phi_x = phi_x[0] + phi_x[1];
  const std::complex<double> full_phi_y = phi_y[0] + phi_y[1];
  const double p_dis =
      0.5 * (std::norm(full_psi_x * full_phi_y) + std::norm(full_psi_y * full_phi_x));
  if (stat == Statistics::distinguishable) return p_dis;

  double exchange = 0.0;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3)
        for (int i4 = 0; i4 < 2; ++i4)
          exchange += std::real(std::conj(psi_x[i1]) * std::conj(phi_y[i2]) * psi_y[i3] *
                                phi_x[i4]);

  const double n = joint_norm(sys.overlap_sq, stat);
  const double sign = (stat == Statistics::boson) ? 1.0 : -1.0;
  return 2.0 * n * n * p_dis + sign * 2.0 * n * n * exchange;
}

double exchange_expansion_scale(double x, double y, const TwoParticleSystem& sys) {
  const auto envelope = [](const DiffractedState& s, double pos) {
    return s.norm * (std::abs(s.beam(pos, Slit::A)) + std::abs(s.beam(pos, Slit::B)));
  };
  const double psi_x = envelope(sys.psi, x);
  const double psi_y = envelope(sys.psi, y);
  const double phi_x = envelope(sys.phi, x);
  const double phi_y = envelope(sys.phi, y);
  const double dis_bound = 0.5 * (psi_x * psi_x * phi_y * phi_y + psi_y * psi_y * phi_x * phi_x);
  return dis_bound + psi_x * phi_y * psi_y * phi_x;
}

}  // namespace oracle
}  // namespace twoslit
