#pragma once
// One-dimensional multi-mode Gaussian packet and its free evolution.
//
// Units are fixed at this boundary: lengths in um, wavenumbers in um^-1,
// reduced times tau = hbar*t/m in um^2, position amplitudes in um^-1/2.
// All functions are pure.

#include <complex>

#include "twoslit/errors.hpp"

namespace twoslit {

struct PacketParams {
  double sigma;  // mode-distribution width [um^-1]
  double tau_s;  // reduced flight time source -> slit plane [um^2]
  double tau_d;  // reduced flight time slit plane -> detector [um^2]

  // Throws invalid_parameter_error unless sigma > 0, tau_s >= 0 and
  // tau_d >= 1e-9 (smaller detector times produce exponents beyond double range).
  void validate() const;
};

struct FreeEvolutionCoefficients {
  std::complex<double> c;  // envelope prefactor [um^-1/2]
  double mu;               // spreading factor; mu >= 2, equality exactly at tau = 0
};

// Mode-space amplitude (4*pi)^{1/4} sigma^{-1/2} exp(-k^2/(2 sigma^2)).
// Strictly positive and even in k. Throws invalid_parameter_error for sigma <= 0.
double mode_amplitude(double k, double sigma);

// c = pi^{-1/4} (1/sigma + i sigma tau)^{-1/2} on the principal branch,
// mu = 2 (1 + sigma^4 tau^2). |c|^2 sqrt(pi mu / (2 sigma^2)) = 1 for every tau.
FreeEvolutionCoefficients free_evolution_coefficients(double tau, double sigma);

// Position-space packet c * exp((-sigma^2 x^2 + i sigma^4 x^2 tau) / mu).
// Even in x, unit L2 norm for every tau >= 0.
std::complex<double> free_packet(double x, double tau, double sigma);

}  // namespace twoslit
