#include "twoslit/wavepacket.hpp"

#include <cmath>
#include <string>

namespace twoslit {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void PacketParams::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw invalid_parameter_error("sigma must be positive, got " + std::to_string(sigma));
  if (!(tau_s >= 0.0) || !std::isfinite(tau_s))
    throw invalid_parameter_error("tau_s must be nonnegative, got " + std::to_string(tau_s));
  if (!(tau_d >= 1e-9) || !std::isfinite(tau_d))
    throw invalid_parameter_error("tau_d must be at least 1e-9, got " + std::to_string(tau_d));
}

double mode_amplitude(double k, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw invalid_parameter_error("sigma must be positive, got " + std::to_string(sigma));
  return std::pow(4.0 * kPi, 0.25) / std::sqrt(sigma) * std::exp(-k * k / (2.0 * sigma * sigma));
}

FreeEvolutionCoefficients free_evolution_coefficients(double tau, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw invalid_parameter_error("sigma must be positive, got " + std::to_string(sigma));
  if (!(tau >= 0.0) || !std::isfinite(tau))
    throw invalid_parameter_error("tau must be nonnegative, got " + std::to_string(tau));
  const double s2 = sigma * sigma;
  const std::complex<double> radicand(1.0 / sigma, sigma * tau);
  // Re(radicand) > 0, so the principal square root is never near the branch cut.
  const std::complex<double> c = std::pow(kPi, -0.25) / std::sqrt(radicand);
  return {c, 2.0 * (1.0 + s2 * s2 * tau * tau)};
}

std::complex<double> free_packet(double x, double tau, double sigma) {
  const auto [c, mu] = free_evolution_coefficients(tau, sigma);
  const double s2 = sigma * sigma;
  const double x2 = x * x;
  const std::complex<double> exponent(-s2 * x2 / mu, s2 * s2 * tau * x2 / mu);
  return c * std::exp(exponent);
}

}  // namespace twoslit
