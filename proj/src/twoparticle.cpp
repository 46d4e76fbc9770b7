#include "twoslit/twoparticle.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace twoslit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kFermionDegeneracyTol = 1e-12;
constexpr double kNegativeClampWindow = 1e-14;

// Shared |prefactor_psi prefactor_phi N_psi N_phi|^2 scale of the slice forms.
double slice_prefactor(const TwoParticleSystem& sys) {
  const double cp = std::norm(sys.psi.coeffs.prefactor) * sys.psi.norm * sys.psi.norm;
  const double cf = std::norm(sys.phi.coeffs.prefactor) * sys.phi.norm * sys.phi.norm;
  return cp * cf;
}

double clamp_density(double value) {
  if (value >= 0.0) return value;
  if (value >= -kNegativeClampWindow) return 0.0;
  throw internal_consistency_error("density " + std::to_string(value) +
                                   " below the roundoff clamp window");
}

}  // namespace

const char* statistics_name(Statistics stat) {
  switch (stat) {
    case Statistics::distinguishable: return "distinguishable";
    case Statistics::boson: return "boson";
    case Statistics::fermion: return "fermion";
  }
  return "unknown";
}

const char* statistics_column(Statistics stat) {
  switch (stat) {
    case Statistics::distinguishable: return "dist";
    case Statistics::boson: return "boson";
    case Statistics::fermion: return "fermion";
  }
  return "unknown";
}

std::array<std::complex<double>, 4> pair_overlap_terms(const BeamCoefficients& cpsi,
                                                       const BeamCoefficients& cphi) {
  const std::complex<double> quad(cpsi.alpha + cphi.alpha, cpsi.beta - cphi.beta);
  const double dsum = cpsi.delta + cphi.delta;
  const double ddiff = cpsi.delta - cphi.delta;
  const double gsum = cpsi.gamma + cphi.gamma;
  const double gdiff = cpsi.gamma - cphi.gamma;
  const auto term = [&](double re, double im) {
    const std::complex<double> lin(re, im);
    return std::exp(lin * lin / (4.0 * quad));
  };
  // Terms 0/3 and 1/2 have negated linear coefficients, hence equal squares.
  return {term(dsum, -gdiff), term(ddiff, -gsum), term(-ddiff, gsum), term(-dsum, gdiff)};
}

std::complex<double> pair_overlap(const DiffractedState& psi, const DiffractedState& phi) {
  const std::complex<double> quad(psi.coeffs.alpha + phi.coeffs.alpha,
                                  psi.coeffs.beta - phi.coeffs.beta);
  const auto terms = pair_overlap_terms(psi.coeffs, phi.coeffs);
  const std::complex<double> sum = terms[0] + terms[1] + terms[2] + terms[3];
  // Re(quad) = alpha + alpha_bar > 0: principal root is safe.
  return std::conj(psi.coeffs.prefactor) * phi.coeffs.prefactor * psi.norm * phi.norm *
         std::sqrt(kPi / quad) * sum;
}

double joint_norm(double overlap_sq, Statistics stat) {
  if (!(overlap_sq >= 0.0) || !std::isfinite(overlap_sq))
    throw invalid_parameter_error("overlap_sq must be nonnegative, got " +
                                  std::to_string(overlap_sq));
  switch (stat) {
    case Statistics::distinguishable:
      return 1.0;
    case Statistics::boson:
      return 1.0 / std::sqrt(2.0 + 2.0 * overlap_sq);
    case Statistics::fermion:
      if (1.0 - overlap_sq < kFermionDegeneracyTol) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", overlap_sq);
        throw degenerate_fermion_error(
            std::string("fermion pair state vanishes: |<psi|phi>|^2 = ") + buf +
                " leaves the antisymmetric normalization undefined",
            overlap_sq);
      }
      return 1.0 / std::sqrt(2.0 - 2.0 * overlap_sq);
  }
  throw invalid_parameter_error("unknown statistics variant");
}

TwoParticleSystem make_two_particle_system(const PacketParams& p_psi,
                                           const PacketParams& p_phi,
                                           const SlitGeometry& g) {
  TwoParticleSystem sys;
  sys.psi = diffracted_state(p_psi, g);
  sys.phi = diffracted_state(p_phi, g);
  sys.overlap = pair_overlap(sys.psi, sys.phi);
  sys.overlap_sq = std::norm(sys.overlap);
  return sys;
}

double joint_density(double x, double y, const TwoParticleSystem& sys, Statistics stat) {
  const std::complex<double> psi_x = sys.psi.amplitude(x);
  const std::complex<double> psi_y = sys.psi.amplitude(y);
  const std::complex<double> phi_x = sys.phi.amplitude(x);
  const std::complex<double> phi_y = sys.phi.amplitude(y);
  if (stat == Statistics::distinguishable)
    return 0.5 * (std::norm(psi_x * phi_y) + std::norm(psi_y * phi_x));
  const double n = joint_norm(sys.overlap_sq, stat);
  const std::complex<double> direct = psi_x * phi_y;
  const std::complex<double> exchanged = psi_y * phi_x;
  const std::complex<double> amp =
      (stat == Statistics::boson) ? direct + exchanged : direct - exchanged;
  return n * n * std::norm(amp);
}

double distinguishable_slice(double y, const TwoParticleSystem& sys) {
  const BeamCoefficients& a = sys.psi.coeffs;
  const BeamCoefficients& c = sys.phi.coeffs;
  const double y2 = y * y;
  const double env_psi = std::exp(-2.0 * a.alpha * y2);
  const double env_phi = std::exp(-2.0 * c.alpha * y2);
  const double value =
      2.0 * env_psi * (std::exp(-2.0 * a.delta * y) + std::exp(2.0 * a.delta * y)) +
      2.0 * env_phi * (std::exp(-2.0 * c.delta * y) + std::exp(2.0 * c.delta * y)) +
      4.0 * env_psi * std::cos(2.0 * a.gamma * y) + 4.0 * env_phi * std::cos(2.0 * c.gamma * y);
  return slice_prefactor(sys) * value;
}

double exchange_slice(double y, const TwoParticleSystem& sys) {
  const BeamCoefficients& a = sys.psi.coeffs;
  const BeamCoefficients& c = sys.phi.coeffs;
  const double y2 = y * y;
  const double chirp = (a.beta - c.beta) * y2;  // relative quadratic phase
  const double dsum = (a.delta + c.delta) * y;
  const double ddiff = (a.delta - c.delta) * y;
  const double gsum = (c.gamma + a.gamma) * y;
  const double gdiff = (c.gamma - a.gamma) * y;
  const double value = 4.0 * std::exp(-dsum) * std::cos(chirp + gdiff) +
                       4.0 * std::exp(dsum) * std::cos(chirp - gdiff) +
                       4.0 * std::exp(ddiff) * std::cos(chirp + gsum) +
                       4.0 * std::exp(-ddiff) * std::cos(chirp - gsum);
  return slice_prefactor(sys) * std::exp(-(a.alpha + c.alpha) * y2) * value;
}

DetectionPattern fixed_detector_pattern(const std::vector<double>& y_grid,
                                        const TwoParticleSystem& sys, Statistics stat) {
  DetectionPattern pattern;
  pattern.x_fixed = 0.0;
  pattern.y_grid = y_grid;
  pattern.stat = stat;
  pattern.density.reserve(y_grid.size());
  const double n = joint_norm(sys.overlap_sq, stat);  // 1 for distinguishable
  for (const double y : y_grid) {
    double value;
    if (stat == Statistics::distinguishable) {
      value = distinguishable_slice(y, sys);
    } else {
      const double exchange = exchange_slice(y, sys);
      const double dis = distinguishable_slice(y, sys);
      value = 2.0 * n * n *
              ((stat == Statistics::boson) ? dis + exchange : dis - exchange);
    }
    pattern.density.push_back(clamp_density(value));
  }
  return pattern;
}

double initial_overlap(double sigma, double sigma_bar) {
  if (!(sigma > 0.0) || !(sigma_bar > 0.0))
    throw invalid_parameter_error("mode widths must be positive");
  return 2.0 * sigma * sigma_bar / (sigma * sigma + sigma_bar * sigma_bar);
}

}  // namespace twoslit
