#pragma once
// Subcommand implementations behind the CLI. Return values are process exit
// codes: 0 success, 1 physics/validation/IO failure, 2 configuration error.

#include <ostream>
#include <string>

#include "twoslit/run_config.hpp"

namespace twoslit {

// Coincidence pattern CSV (y,P_dist,P_boson,P_fermion; requested columns only).
int cmd_pattern(const RunConfig& cfg, std::ostream& diag);

// Overlap sweep CSV (sigma_bar,initial_overlap,final_overlap_sq).
int cmd_overlap_sweep(const RunConfig& cfg, std::ostream& diag);

// Fixed presets: 1 -> pattern at sigma_bar=2, 2 -> pattern at sigma_bar=4,
// 3 -> overlap sweep. output_override replaces the default figureN.csv.
int cmd_figure(int which, const std::string& output_override, std::ostream& diag);

// Runs every oracle cross-check and prints one line per check plus the
// mode-overlap reference note; 0 iff all checks pass.
int cmd_validate(const RunConfig& cfg, std::ostream& out);

}  // namespace twoslit
