#pragma once
// Two-particle joint states and coincidence detection densities.
//
// The pair state is psi x phi symmetrized (bosons), antisymmetrized
// (fermions), or kept as the symmetric-density product (distinguishable).
// Densities use the direct expansion |N(psi(x)phi(y) +- psi(y)phi(x))|^2 as
// the primary path; the x = 0 slice also has specialized cosh/cos closed
// forms that the validation suite cross-checks against it.

#include <array>
#include <complex>
#include <vector>

#include "twoslit/slit.hpp"

namespace twoslit {

enum class Statistics { distinguishable, boson, fermion };

const char* statistics_name(Statistics stat);

// Short column suffix used by the CSV writers: dist, boson, fermion.
const char* statistics_column(Statistics stat);

// <psi|phi> between the unit-normalized post-slit states, via the closed form
// built from four Gaussian integrals (one per slit pairing).
std::complex<double> pair_overlap(const DiffractedState& psi, const DiffractedState& phi);

// The four Gaussian-integral terms of the overlap before the common prefactor;
// terms 0 and 3 are equal, as are 1 and 2 (their linear coefficients are
// negatives, squared). Exposed for transcription checks.
std::array<std::complex<double>, 4> pair_overlap_terms(const BeamCoefficients& cpsi,
                                                       const BeamCoefficients& cphi);

// Joint normalization: 1 for distinguishable pairs, 1/sqrt(2 +- 2 overlap_sq)
// for identical ones. Throws degenerate_fermion_error when the antisymmetric
// state vanishes (1 - overlap_sq < 1e-12).
double joint_norm(double overlap_sq, Statistics stat);

struct TwoParticleSystem {
  DiffractedState psi;  // first particle (width sigma)
  DiffractedState phi;  // second particle (width sigma_bar)
  std::complex<double> overlap;
  double overlap_sq;
};

TwoParticleSystem make_two_particle_system(const PacketParams& p_psi,
                                           const PacketParams& p_phi,
                                           const SlitGeometry& g);

// Joint density of detecting one particle at x and the other at y [um^-2].
// Distinguishable: (|psi(x)phi(y)|^2 + |psi(y)phi(x)|^2)/2.
double joint_density(double x, double y, const TwoParticleSystem& sys, Statistics stat);

// Closed-form x = 0 slice of the distinguishable density (cosh/cos form).
double distinguishable_slice(double y, const TwoParticleSystem& sys);

// Closed-form x = 0 slice of the exchange interference sum X(y); the
// identical-particle slices are 2 N^2 (distinguishable_slice +- X).
double exchange_slice(double y, const TwoParticleSystem& sys);

struct DetectionPattern {
  double x_fixed;
  std::vector<double> y_grid;
  Statistics stat;
  std::vector<double> density;
};

// Coincidence pattern with one detector fixed at x = 0, assembled from the
// slice closed forms. Values in [-1e-14, 0) are clamped to 0 (roundoff in the
// fermion difference); anything more negative raises internal_consistency_error.
DetectionPattern fixed_detector_pattern(const std::vector<double>& y_grid,
                                        const TwoParticleSystem& sys, Statistics stat);

// Mode-distribution overlap 2 sigma sigma_bar / (sigma^2 + sigma_bar^2) of the
// source packets, before any propagation.
double initial_overlap(double sigma, double sigma_bar);

}  // namespace twoslit
