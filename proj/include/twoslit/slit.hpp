#pragma once
// Gaussian-aperture diffraction. Each slit is a Gaussian transmission window
// of scale b centered at +x0 (slit A) or -x0 (slit B); propagating the free
// packet through one window gives a closed-form beam
//
//   psi(x) = prefactor * exp(i h x^2/2) * exp(-(alpha - i beta) x^2)
//                      * exp(-+(delta + i gamma) x)     (- for A, + for B).
//
// The quadratic phase exp(i h x^2/2) is common to every beam and cancels in
// all densities; it is kept so amplitudes can be compared against direct
// integration.

#include <complex>

#include "twoslit/wavepacket.hpp"

namespace twoslit {

struct SlitGeometry {
  double b;   // Gaussian slit half-width parameter [um]
  double x0;  // slit-center offset [um]; slit A at +x0, slit B at -x0

  // Throws invalid_parameter_error unless x0 > 0 and b >= 1e-9 (smaller
  // apertures drive the aperture exponent outside double range).
  void validate() const;
  // True when x0 > b; callers may warn when the slits are not separated.
  bool well_separated() const;
};

enum class Slit { A, B };

struct BeamCoefficients {
  double d_coef;  // [um^-2] 1/(2 b^2) + sigma^2/mu(tau_s); always > 0
  double f_coef;  // [um^-2] -sigma^4 tau_s/mu(tau_s) - 1/(2 tau_d); always < 0
  double g_coef;  // [um^-1] +-x0/b^2; the sign encodes the slit the set was built for
  double h_coef;  // [um^-2] 1/tau_d
  double alpha;   // [um^-2] d_coef h^2 / (4 (d^2 + f^2)); > 0 (normalizable beam)
  double beta;    // [um^-2] f_coef h^2 / (4 (d^2 + f^2))
  double gamma;   // [um^-1] d_coef g h / (2 (d^2 + f^2))
  double delta;   // [um^-1] g h f_coef / (2 (d^2 + f^2))
  std::complex<double> prefactor;  // [um^-1/2]; identical for both slits
};

// Free-propagation kernel (2 pi i tau_d)^{-1/2} exp(i (x - xs)^2 / (2 tau_d)).
// Modulus (2 pi tau_d)^{-1/2} independent of x and xs; symmetric in (x, xs).
std::complex<double> propagator_kernel(double x, double xs, double tau_d);

// Exponent coefficients of the beam behind the given slit. Slit B differs
// from slit A only in the signs of g_coef, gamma and delta.
BeamCoefficients slit_beam_coefficients(const PacketParams& p, const SlitGeometry& g,
                                        Slit slit);

// Beam amplitude from one coefficient set; the slit argument applies the
// mirror sign to the linear factor, so a single (slit A) set describes both
// beams. Passing a slit-B set swaps the roles of the two labels.
std::complex<double> slit_amplitude(double x, const BeamCoefficients& c, Slit slit);

// N such that N*(psi_A + psi_B) has unit L2 norm:
// N = (1/|prefactor|) (alpha/2pi)^{1/4} (e^{delta^2/2alpha} + e^{-gamma^2/2alpha})^{-1/2}.
// Throws non_normalizable_error when alpha <= 0.
double single_particle_norm(const BeamCoefficients& c);

// One particle's post-slit state: canonical (slit A) coefficients plus its norm.
struct DiffractedState {
  PacketParams params;
  SlitGeometry geometry;
  BeamCoefficients coeffs;
  double norm;

  std::complex<double> beam(double x, Slit slit) const;  // unnormalized single beam
  std::complex<double> amplitude(double x) const;        // norm * (beam A + beam B)
};

DiffractedState diffracted_state(const PacketParams& p, const SlitGeometry& g);

}  // namespace twoslit
