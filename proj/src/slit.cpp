#include "twoslit/slit.hpp"

#include <cmath>
#include <string>

namespace twoslit {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void SlitGeometry::validate() const {
  if (!(b >= 1e-9) || !std::isfinite(b))
    throw invalid_parameter_error("slit width parameter b must be at least 1e-9, got " +
                                  std::to_string(b));
  if (!(x0 > 0.0) || !std::isfinite(x0))
    throw invalid_parameter_error("slit offset x0 must be positive, got " + std::to_string(x0));
}

bool SlitGeometry::well_separated() const { return x0 > b; }

std::complex<double> propagator_kernel(double x, double xs, double tau_d) {
  if (!(tau_d >= 1e-9) || !std::isfinite(tau_d))
    throw invalid_parameter_error("tau_d must be at least 1e-9, got " + std::to_string(tau_d));
  const std::complex<double> radicand(0.0, 2.0 * kPi * tau_d);
  const double dx = x - xs;
  return 1.0 / std::sqrt(radicand) * std::exp(std::complex<double>(0.0, dx * dx / (2.0 * tau_d)));
}

BeamCoefficients slit_beam_coefficients(const PacketParams& p, const SlitGeometry& g,
                                        Slit slit) {
  p.validate();
  g.validate();
  const auto [c_s, mu] = free_evolution_coefficients(p.tau_s, p.sigma);
  const double s2 = p.sigma * p.sigma;
  const double spread = s2 / mu;  // decay rate of the packet density at the slit plane
  const double d = 1.0 / (2.0 * g.b * g.b) + spread;
  const double f = -s2 * s2 * p.tau_s / mu - 1.0 / (2.0 * p.tau_d);
  const double gg = (slit == Slit::A ? g.x0 : -g.x0) / (g.b * g.b);
  const double h = 1.0 / p.tau_d;
  const double q = d * d + f * f;

  BeamCoefficients c;
  c.d_coef = d;
  c.f_coef = f;
  c.g_coef = gg;
  c.h_coef = h;
  c.alpha = d * h * h / (4.0 * q);
  c.beta = f * h * h / (4.0 * q);
  c.gamma = d * gg * h / (2.0 * q);
  c.delta = gg * h * f / (2.0 * q);

  // The literal exponent -x0^2/(2 b^2) + g^2 (d - i f)/(4 q) cancels almost
  // completely in its real part for narrow slits; the equivalent grouping
  // -(x0^2/(2 b^2)) (spread*d + f^2)/q is cancellation-free.
  const double real_exp = -(g.x0 * g.x0 / (2.0 * g.b * g.b)) * (spread * d + f * f) / q;
  const double imag_exp = -gg * gg * f / (4.0 * q);
  // Re(2 i tau_d (d + i f)) = -2 tau_d f > 0, so the principal root is safe.
  const std::complex<double> root =
      1.0 / std::sqrt(std::complex<double>(-2.0 * p.tau_d * f, 2.0 * p.tau_d * d));
  c.prefactor = c_s * root * std::exp(std::complex<double>(real_exp, imag_exp));
  return c;
}

std::complex<double> slit_amplitude(double x, const BeamCoefficients& c, Slit slit) {
  const double sign = (slit == Slit::A) ? -1.0 : 1.0;
  const double x2 = x * x;
  const std::complex<double> exponent(-c.alpha * x2 + sign * c.delta * x,
                                      0.5 * c.h_coef * x2 + c.beta * x2 + sign * c.gamma * x);
  return c.prefactor * std::exp(exponent);
}

double single_particle_norm(const BeamCoefficients& c) {
  if (!(c.alpha > 0.0))
    throw non_normalizable_error("alpha must be positive for a normalizable state, got " +
                                 std::to_string(c.alpha));
  const double well = std::exp(c.delta * c.delta / (2.0 * c.alpha)) +
                      std::exp(-c.gamma * c.gamma / (2.0 * c.alpha));
  return std::pow(c.alpha / (2.0 * kPi), 0.25) / (std::abs(c.prefactor) * std::sqrt(well));
}

std::complex<double> DiffractedState::beam(double x, Slit slit) const {
  return slit_amplitude(x, coeffs, slit);
}

std::complex<double> DiffractedState::amplitude(double x) const {
  return norm * (slit_amplitude(x, coeffs, Slit::A) + slit_amplitude(x, coeffs, Slit::B));
}

DiffractedState diffracted_state(const PacketParams& p, const SlitGeometry& g) {
  DiffractedState s;
  s.params = p;
  s.geometry = g;
  s.coeffs = slit_beam_coefficients(p, g, Slit::A);
  s.norm = single_particle_norm(s.coeffs);
  return s;
}

}  // namespace twoslit
