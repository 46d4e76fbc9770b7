#pragma once
// Adaptive Gauss-Kronrod 7-15 integration of complex integrands on finite
// intervals. Deterministic: the worst interval (largest error estimate, ties
// broken by the smaller left endpoint) is bisected, and the final total is
// summed left to right, so identical inputs give bit-identical results.

#include <complex>
#include <functional>

#include "twoslit/errors.hpp"

namespace twoslit {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  // Envelope cutoff relative to its peak; used by callers to pick truncation radii.
  double truncation_threshold = 1e-14;
  int max_subdivisions = 2000;

  void validate() const;  // throws invalid_parameter_error
};

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate;  // estimated bound on |value - exact|
  int subdivisions;
  int evaluations;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

// Integrates f over [lo, hi] until error_estimate <= max(abs_tol, rel_tol*|value|).
// Throws convergence_error (carrying the best estimate) once max_subdivisions
// intervals exist without meeting the target.
QuadratureResult integrate_1d(const ComplexIntegrand& f, double lo, double hi,
                              const QuadratureSpec& spec = {});

// Half-width R with exp(-R^2/(2 b^2)) = threshold, i.e. where a Gaussian
// envelope of scale b falls to threshold times its peak.
double gaussian_truncation_radius(double b, double threshold);

}  // namespace twoslit
