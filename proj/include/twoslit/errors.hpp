#pragma once
// Error taxonomy. The CLI maps config_error to exit code 2 and every other
// twoslit::error to exit code 1.

#include <complex>
#include <stdexcept>
#include <string>

namespace twoslit {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter outside its documented domain (non-positive width, negative time, ...).
class invalid_parameter_error : public error {
 public:
  using error::error;
};

// Beam decay coefficient alpha <= 0: the post-slit state has no finite L2 norm.
class non_normalizable_error : public error {
 public:
  using error::error;
};

// Fermion pair with 1 - |<psi|phi>|^2 below tolerance: the antisymmetric state
// vanishes and its normalization is undefined.
class degenerate_fermion_error : public error {
 public:
  degenerate_fermion_error(const std::string& msg, double overlap_sq)
      : error(msg), overlap_sq(overlap_sq) {}
  double overlap_sq;
};

// Adaptive integration ran out of subdivisions; carries the best estimate.
class convergence_error : public error {
 public:
  convergence_error(const std::string& msg, std::complex<double> best_estimate,
                    double error_estimate)
      : error(msg), best_estimate(best_estimate), error_estimate(error_estimate) {}
  std::complex<double> best_estimate;
  double error_estimate;
};

// A value violated an internal invariant (e.g. density below the roundoff clamp window).
class internal_consistency_error : public error {
 public:
  using error::error;
};

// Bad flag value, malformed config file, or inconsistent run configuration.
class config_error : public error {
 public:
  using error::error;
};

// Output file could not be created or written.
class io_error : public error {
 public:
  using error::error;
};

}  // namespace twoslit
