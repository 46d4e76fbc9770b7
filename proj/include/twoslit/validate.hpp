#pragma once
// Cross-validation harness. Every closed form is checked against its
// brute-force oracle; each check reports its worst measured deviation against
// a pinned tolerance. The checks are granular so tests can probe sensitivity
// (e.g. perturb a coefficient and watch the matching check fail).

#include <ostream>
#include <string>
#include <vector>

#include "twoslit/oracle.hpp"
#include "twoslit/run_config.hpp"

namespace twoslit {

struct CheckResult {
  std::string name;
  double measured;  // worst deviation found
  double tolerance;
  bool pass;
  std::string note;  // optional detail, printed after the numbers
};

// Closed-form free packet vs Fourier synthesis, sup-norm relative deviation
// over x in [-5, 5] for tau in {0, tau_s}, sigma in {sigma, sigma_bar}.
CheckResult check_fourier_consistency(const RunConfig& cfg);

// Closed-form beams from the given coefficient set vs direct aperture
// integration: worst modulus and phase deviation at 21 points, both slits.
// The coefficient set is a parameter so callers can test sensitivity.
CheckResult check_slit_closed_vs_quadrature(const PacketParams& p, const SlitGeometry& g,
                                            const BeamCoefficients& coeffs,
                                            const std::string& label);

// |Integral |amplitude|^2 - 1| for one normalized state.
CheckResult check_state_normalization(const DiffractedState& s, const std::string& label);

// Closed-form overlap vs quadrature, relative deviation.
CheckResult check_overlap_closed_vs_quadrature(const TwoParticleSystem& sys,
                                               const std::string& label);

// Direct-expansion density vs the sixteen-term exchange assembly at
// deterministic pseudo-random points; scale-aware relative deviation.
CheckResult check_density_vs_exchange_expansion(const TwoParticleSystem& sys,
                                                Statistics stat, unsigned seed,
                                                const std::string& label);

// Slice closed forms vs the general density at x = 0 over the config grid.
CheckResult check_slice_vs_general(const TwoParticleSystem& sys, Statistics stat,
                                   const std::vector<double>& y_grid,
                                   const std::string& label);

// |2D quadrature of the joint density - 1|.
CheckResult check_density_normalization(const TwoParticleSystem& sys, Statistics stat,
                                        const std::string& label);

// Degenerate fermion configuration must raise the dedicated error (not crash,
// not return a value).
CheckResult check_fermion_degeneracy_error(const RunConfig& cfg);

// All checks for the given configuration, in print order.
std::vector<CheckResult> run_all_checks(const RunConfig& cfg);

void print_check(std::ostream& os, const CheckResult& r);

// Mode-overlap table: the defining formula next to the quoted reference series
// {0.2, 0.48, 0.47, 0.12}, which disagrees with the formula beyond the first
// entry. Informational; the formula is authoritative here.
void print_initial_overlap_note(std::ostream& os, double sigma);

}  // namespace twoslit
