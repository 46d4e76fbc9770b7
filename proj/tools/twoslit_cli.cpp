// Command-line front end. Wiring only: flag parsing, config-file layering, and
// exit-code mapping live here; all physics sits in the core library.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twoslit/commands.hpp"
#include "twoslit/errors.hpp"
#include "twoslit/run_config.hpp"
#include "twoslit/version.hpp"

namespace {

struct FlagVals {
  double sigma = 0, sigma_bar = 0, b = 0, x0 = 0, tau_s = 0, tau_d = 0;
  double x_fixed = 0, y_min = 0, y_max = 0;
  int y_steps = 0;
  double sweep_min = 0, sweep_max = 0;
  int sweep_steps = 0;
  std::string stats, out, config;
};

void add_physics_flags(CLI::App* cmd, FlagVals& v) {
  cmd->add_option("--sigma", v.sigma, "first particle mode width [1/um]");
  cmd->add_option("--sigma-bar", v.sigma_bar, "second particle mode width [1/um]");
  cmd->add_option("--b", v.b, "slit half-width parameter [um]");
  cmd->add_option("--x0", v.x0, "slit-center offset from the axis [um]");
  cmd->add_option("--tau-s", v.tau_s, "reduced flight time source -> slits [um^2]");
  cmd->add_option("--tau-d", v.tau_d, "reduced flight time slits -> detector [um^2]");
  cmd->add_option("--config", v.config, "key=value config file (flags override it)");
}

void add_grid_flags(CLI::App* cmd, FlagVals& v) {
  cmd->add_option("--y-min", v.y_min, "scanned detector range start [um]");
  cmd->add_option("--y-max", v.y_max, "scanned detector range end [um]");
  cmd->add_option("--y-steps", v.y_steps, "number of grid points");
}

void add_output_flag(CLI::App* cmd, FlagVals& v) {
  cmd->add_option("--out", v.out, "output CSV path, '-' for stdout");
}

bool passed(const CLI::App* cmd, const std::string& name) {
  const CLI::Option* opt = cmd->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

// Layering: defaults, then config file, then explicitly passed flags.
twoslit::RunConfig build_config(const CLI::App* cmd, const FlagVals& v) {
  twoslit::RunConfig cfg;
  if (passed(cmd, "--config")) twoslit::apply_config_file(cfg, v.config);
  if (passed(cmd, "--sigma")) cfg.sigma = v.sigma;
  if (passed(cmd, "--sigma-bar")) cfg.sigma_bar = v.sigma_bar;
  if (passed(cmd, "--b")) cfg.b = v.b;
  if (passed(cmd, "--x0")) cfg.x0 = v.x0;
  if (passed(cmd, "--tau-s")) cfg.tau_s = v.tau_s;
  if (passed(cmd, "--tau-d")) cfg.tau_d = v.tau_d;
  if (passed(cmd, "--x-fixed")) cfg.x_fixed = v.x_fixed;
  if (passed(cmd, "--y-min")) cfg.y_min = v.y_min;
  if (passed(cmd, "--y-max")) cfg.y_max = v.y_max;
  if (passed(cmd, "--y-steps")) cfg.y_steps = v.y_steps;
  if (passed(cmd, "--sweep-min")) cfg.sweep_min = v.sweep_min;
  if (passed(cmd, "--sweep-max")) cfg.sweep_max = v.sweep_max;
  if (passed(cmd, "--sweep-steps")) cfg.sweep_steps = v.sweep_steps;
  if (passed(cmd, "--stats")) cfg.stats = twoslit::parse_stats_list(v.stats);
  if (passed(cmd, "--out")) cfg.output_path = v.out;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-particle two-slit coincidence simulator"};
  app.set_version_flag("--version", twoslit::version_string);
  app.require_subcommand(1);

  FlagVals pattern_vals, sweep_vals, validate_vals;
  std::string figure_out;
  int figure_which = 0;

  CLI::App* pattern = app.add_subcommand(
      "pattern", "coincidence pattern vs y with one detector fixed at x");
  add_physics_flags(pattern, pattern_vals);
  add_grid_flags(pattern, pattern_vals);
  pattern->add_option("--x-fixed", pattern_vals.x_fixed, "fixed detector position [um]");
  pattern->add_option("--stats", pattern_vals.stats,
                      "comma-separated subset of dist,boson,fermion");
  add_output_flag(pattern, pattern_vals);

  CLI::App* sweep = app.add_subcommand(
      "overlap-sweep", "state overlap before and after the slits vs sigma-bar");
  add_physics_flags(sweep, sweep_vals);
  sweep->add_option("--sweep-min", sweep_vals.sweep_min, "sigma-bar range start [1/um]");
  sweep->add_option("--sweep-max", sweep_vals.sweep_max, "sigma-bar range end [1/um]");
  sweep->add_option("--sweep-steps", sweep_vals.sweep_steps, "number of sweep points");
  add_output_flag(sweep, sweep_vals);

  CLI::App* figure = app.add_subcommand("figure", "canonical outputs 1, 2, and 3");
  figure->add_option("which", figure_which, "figure number (1, 2, or 3)")->required();
  figure->add_option("--out", figure_out, "output CSV path, '-' for stdout");

  CLI::App* validate = app.add_subcommand(
      "validate", "cross-check every closed form against quadrature");
  add_physics_flags(validate, validate_vals);
  add_grid_flags(validate, validate_vals);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (pattern->parsed()) return twoslit::cmd_pattern(build_config(pattern, pattern_vals), std::cerr);
    if (sweep->parsed()) return twoslit::cmd_overlap_sweep(build_config(sweep, sweep_vals), std::cerr);
    if (figure->parsed()) return twoslit::cmd_figure(figure_which, figure_out, std::cerr);
    if (validate->parsed()) return twoslit::cmd_validate(build_config(validate, validate_vals), std::cout);
  } catch (const twoslit::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const twoslit::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
