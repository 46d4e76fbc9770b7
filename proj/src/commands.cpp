#include "twoslit/commands.hpp"

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "twoslit/csv.hpp"
#include "twoslit/errors.hpp"
#include "twoslit/validate.hpp"
#include "twoslit/version.hpp"

namespace twoslit {

namespace {

std::vector<std::string> parameter_metadata(const RunConfig& cfg) {
  return {
      "tool: twoslit " + std::string(version_string),
      "sigma=" + format_number(cfg.sigma) + " sigma_bar=" + format_number(cfg.sigma_bar),
      "b=" + format_number(cfg.b) + " x0=" + format_number(cfg.x0) +
          " tau_s=" + format_number(cfg.tau_s) + " tau_d=" + format_number(cfg.tau_d),
  };
}

int fail_with(std::ostream& diag, const error& e) {
  diag << "error: " << e.what() << "\n";
  return 1;
}

int reject_config(std::ostream& diag, const std::vector<std::string>& problems) {
  for (const std::string& p : problems) diag << "config error: " << p << "\n";
  return 2;
}

void warn_geometry(const RunConfig& cfg, std::ostream& diag) {
  if (!cfg.geometry().well_separated())
    diag << "warning: slit separation x0 does not exceed width b; "
            "the two beams overlap strongly\n";
}

// One density column per requested statistics, general formula off the x=0
// fast path only when the fixed detector sits away from the symmetry axis.
CsvDocument build_pattern_document(const RunConfig& cfg) {
  const TwoParticleSystem sys =
      make_two_particle_system(cfg.psi_params(), cfg.phi_params(), cfg.geometry());
  const std::vector<double> grid = cfg.y_grid();

  CsvDocument doc;
  doc.metadata = parameter_metadata(cfg);
  doc.metadata.push_back("x_fixed=" + format_number(cfg.x_fixed) +
                         " (first detector position [um])");
  doc.metadata.push_back("columns: y coordinate, joint detection density at (x_fixed, y)");
  doc.columns.push_back("y");

  std::vector<std::vector<double>> density_columns;
  for (const Statistics stat : cfg.stats) {
    doc.columns.push_back(std::string("P_") + statistics_column(stat));
    std::vector<double> column;
    column.reserve(grid.size());
    if (cfg.x_fixed == 0.0) {
      const DetectionPattern pattern = fixed_detector_pattern(grid, sys, stat);
      column = pattern.density;
    } else {
      for (const double y : grid) column.push_back(joint_density(cfg.x_fixed, y, sys, stat));
    }
    density_columns.push_back(std::move(column));
  }

  doc.rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row;
    row.reserve(1 + density_columns.size());
    row.push_back(grid[i]);
    for (const std::vector<double>& col : density_columns) row.push_back(col[i]);
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

CsvDocument build_sweep_document(const RunConfig& cfg) {
  CsvDocument doc;
  doc.metadata = parameter_metadata(cfg);
  doc.metadata.push_back("columns: second-particle width, mode overlap before the slits, "
                         "squared state overlap after the slits");
  doc.columns = {"sigma_bar", "initial_overlap", "final_overlap_sq"};

  const PacketParams p_psi = cfg.psi_params();
  const SlitGeometry geom = cfg.geometry();
  const DiffractedState psi = diffracted_state(p_psi, geom);
  for (const double sigma_bar : cfg.sweep_grid()) {
    const PacketParams p_phi{sigma_bar, cfg.tau_s, cfg.tau_d};
    const DiffractedState phi = diffracted_state(p_phi, geom);
    const std::complex<double> overlap = pair_overlap(psi, phi);
    doc.rows.push_back(
        {sigma_bar, initial_overlap(cfg.sigma, sigma_bar), std::norm(overlap)});
  }
  return doc;
}

}  // namespace

int cmd_pattern(const RunConfig& cfg, std::ostream& diag) {
  const std::vector<std::string> problems = cfg.problems();
  if (!problems.empty()) return reject_config(diag, problems);
  warn_geometry(cfg, diag);
  try {
    const CsvDocument doc = build_pattern_document(cfg);
    const std::string path = cfg.output_path.empty() ? "pattern.csv" : cfg.output_path;
    write_csv(doc, path, std::cout);
    if (path != "-") diag << "wrote " << path << "\n";
  } catch (const degenerate_fermion_error& e) {
    diag << "error: " << e.what() << "\n";
    diag << "hint: a fermion pattern needs distinguishable packets; "
            "set different widths for the two particles\n";
    return 1;
  } catch (const error& e) {
    return fail_with(diag, e);
  }
  return 0;
}

int cmd_overlap_sweep(const RunConfig& cfg, std::ostream& diag) {
  const std::vector<std::string> problems = cfg.problems();
  if (!problems.empty()) return reject_config(diag, problems);
  warn_geometry(cfg, diag);
  try {
    const CsvDocument doc = build_sweep_document(cfg);
    const std::string path = cfg.output_path.empty() ? "overlap_sweep.csv" : cfg.output_path;
    write_csv(doc, path, std::cout);
    if (path != "-") diag << "wrote " << path << "\n";
  } catch (const error& e) {
    return fail_with(diag, e);
  }
  return 0;
}

int cmd_figure(int which, const std::string& output_override, std::ostream& diag) {
  RunConfig cfg;
  switch (which) {
    case 1:
      cfg.sigma_bar = 2.0;
      cfg.output_path = output_override.empty() ? "figure1.csv" : output_override;
      return cmd_pattern(cfg, diag);
    case 2:
      cfg.sigma_bar = 4.0;
      cfg.output_path = output_override.empty() ? "figure2.csv" : output_override;
      return cmd_pattern(cfg, diag);
    case 3:
      cfg.output_path = output_override.empty() ? "figure3.csv" : output_override;
      return cmd_overlap_sweep(cfg, diag);
    default:
      diag << "config error: figure number must be 1, 2, or 3\n";
      return 2;
  }
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const std::vector<std::string> problems = cfg.problems();
  if (!problems.empty()) {
    for (const std::string& p : problems) out << "config error: " << p << "\n";
    return 2;
  }
  bool all_pass = true;
  try {
    for (const CheckResult& r : run_all_checks(cfg)) {
      print_check(out, r);
      all_pass = all_pass && r.pass;
    }
  } catch (const error& e) {
    out << "error: " << e.what() << "\n";
    return 1;
  }
  print_initial_overlap_note(out, cfg.sigma);
  out << (all_pass ? "all checks passed\n" : "some checks failed\n");
  return all_pass ? 0 : 1;
}

}  // namespace twoslit
