#pragma once
// Brute-force numerical counterparts of every closed form: Fourier synthesis
// of the free packet, direct aperture integration, norms and overlaps by
// quadrature, 2D density normalization, and the term-by-term exchange
// expansion of the joint density. These are the validation oracles; the
// production evaluation paths never call them.

#include <complex>

#include "twoslit/quadrature.hpp"
#include "twoslit/twoparticle.hpp"

namespace twoslit {
namespace oracle {

// (2 pi)^{-1} Integral of f(k) exp(i(k x - k^2 tau/2)) dk, truncated where the
// mode envelope falls below spec.truncation_threshold/100 of its peak.
std::complex<double> fourier_packet(double x, double tau, double sigma,
                                    const QuadratureSpec& spec = {});

// Direct integration of the aperture-weighted propagation
// Integral dxs exp(-(xs -+ x0)^2/(2 b^2)) K(x, xs) psi_free(xs, tau_s).
std::complex<double> slit_amplitude_by_quadrature(double x, const PacketParams& p,
                                                  const SlitGeometry& g, Slit slit,
                                                  const QuadratureSpec& spec = {});

// Half-width beyond which the normalized state amplitude envelope
// exp(-alpha x^2 + |delta x|) falls below threshold times its scale.
double state_truncation_radius(const BeamCoefficients& c, double threshold);

// Integral |state.amplitude|^2 dx over the truncated support.
double state_norm_by_quadrature(const DiffractedState& s, const QuadratureSpec& spec = {});

// Integral conj(a.amplitude) b.amplitude dx; authoritative over the closed form
// whenever the two disagree beyond tolerance.
std::complex<double> overlap_by_quadrature(const DiffractedState& a,
                                           const DiffractedState& b,
                                           const QuadratureSpec& spec = {});

// Iterated 2D quadrature of the joint density; 1 for a correctly normalized
// system. The inner integral runs 100x tighter than spec so its noise does not
// stall the outer adaptation.
double density_normalization_2d(const TwoParticleSystem& sys, Statistics stat,
                                const QuadratureSpec& spec = {});

// Identical-particle density assembled literally as
// 2 N^2 P_dis(x,y) +- 2 N^2 Sum_{i1..i4 over slits}
//   Re(psi*_{i1}(x) phi*_{i2}(y) psi_{i3}(y) phi_{i4}(x))
// over normalization-scaled beams: the sixteen-term counterpart of joint_density.
double joint_density_by_exchange_expansion(double x, double y,
                                           const TwoParticleSystem& sys, Statistics stat);

// Sum of the term-magnitude bounds of that expansion before any cancellation,
// without the 2 N^2 factor. Densities assembled two ways can only be expected
// to agree relative to this scale: at interference minima the individual
// products dwarf the cancelled result, so roundoff is proportional to it.
double exchange_expansion_scale(double x, double y, const TwoParticleSystem& sys);

}  // namespace oracle
}  // namespace twoslit
