#pragma once
// Run configuration shared by the CLI subcommands. Precedence: built-in
// defaults, then config-file entries, then explicit command-line flags.

#include <string>
#include <vector>

#include "twoslit/twoparticle.hpp"

namespace twoslit {

struct RunConfig {
  double sigma = 1.0;      // first particle mode width [um^-1]
  double sigma_bar = 2.0;  // second particle mode width [um^-1]
  double b = 0.1;          // slit half-width parameter [um]
  double x0 = 0.4;         // slit-center offset [um]
  double tau_s = 0.2;      // reduced time source -> slits [um^2]
  double tau_d = 0.2;      // reduced time slits -> detector [um^2]
  double x_fixed = 0.0;    // fixed detector position [um]
  double y_min = -4.0;     // scanned detector range [um]
  double y_max = 4.0;
  int y_steps = 801;
  double sweep_min = 0.1;  // sigma_bar sweep range [um^-1]
  double sweep_max = 5.0;
  int sweep_steps = 99;
  std::vector<Statistics> stats = {Statistics::distinguishable, Statistics::boson,
                                   Statistics::fermion};
  std::string output_path;  // empty: per-command default; "-": stdout

  // Human-readable constraint violations; empty iff the config is usable.
  std::vector<std::string> problems() const;

  std::vector<double> y_grid() const;
  std::vector<double> sweep_grid() const;

  PacketParams psi_params() const;
  PacketParams phi_params() const;
  SlitGeometry geometry() const;
};

// Uniform grid whose endpoints (and interior rational nodes) are computed as
// exact convex combinations, so round values like 0 or 4 land exactly.
std::vector<double> uniform_grid(double lo, double hi, int steps);

// Parses a comma-separated subset of {distinguishable|dist, boson, fermion}
// into canonical order without duplicates. Throws config_error on unknown names.
std::vector<Statistics> parse_stats_list(const std::string& names);

// Applies "key = value" lines (flag spellings, with '-' or '_', no leading
// dashes; '#' comments) on top of cfg. Throws config_error on unknown keys or
// unreadable files.
void apply_config_file(RunConfig& cfg, const std::string& path);

}  // namespace twoslit
