#include "twoslit/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "twoslit/errors.hpp"

namespace twoslit {

std::vector<double> uniform_grid(double lo, double hi, int steps) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  const double denom = static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i)
    grid.push_back((lo * (denom - i) + hi * i) / denom);
  return grid;
}

std::vector<std::string> RunConfig::problems() const {
  std::vector<std::string> out;
  const auto positive = [&](double v, const char* name) {
    if (!(v > 0.0)) out.push_back(std::string(name) + " must be positive");
  };
  positive(sigma, "sigma");
  positive(sigma_bar, "sigma-bar");
  positive(b, "b");
  positive(x0, "x0");
  positive(tau_d, "tau-d");
  if (!(tau_s >= 0.0)) out.push_back("tau-s must be nonnegative");
  if (!(y_min < y_max)) out.push_back("y-min must be below y-max");
  if (y_steps < 2) out.push_back("y-steps must be at least 2");
  if (!(sweep_min > 0.0)) out.push_back("sweep range must be positive");
  if (!(sweep_min < sweep_max)) out.push_back("sweep minimum must be below its maximum");
  if (sweep_steps < 2) out.push_back("sweep steps must be at least 2");
  if (stats.empty()) out.push_back("at least one statistics family must be selected");
  return out;
}

std::vector<double> RunConfig::y_grid() const { return uniform_grid(y_min, y_max, y_steps); }

std::vector<double> RunConfig::sweep_grid() const {
  return uniform_grid(sweep_min, sweep_max, sweep_steps);
}

PacketParams RunConfig::psi_params() const { return {sigma, tau_s, tau_d}; }
PacketParams RunConfig::phi_params() const { return {sigma_bar, tau_s, tau_d}; }
SlitGeometry RunConfig::geometry() const { return {b, x0}; }

namespace {

std::string trim(const std::string& s) {
  std::size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  std::size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Canonical key form: '-' for '_' so both flag spellings work.
std::string canonical_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

double parse_double(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("config value for '" + key + "' is not a number: '" + value + "'");
  }
}

int parse_int(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("config value for '" + key + "' is not an integer: '" + value + "'");
  }
}

}  // namespace

std::vector<Statistics> parse_stats_list(const std::string& names) {
  std::vector<Statistics> out;
  const auto add = [&](Statistics s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  std::stringstream ss(names);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string name = trim(item);
    if (name == "distinguishable" || name == "dist")
      add(Statistics::distinguishable);
    else if (name == "boson")
      add(Statistics::boson);
    else if (name == "fermion")
      add(Statistics::fermion);
    else if (!name.empty())
      throw config_error("unknown statistics name '" + name +
                         "' (expected distinguishable|dist, boson, fermion)");
  }
  if (out.empty()) throw config_error("statistics list is empty");
  std::sort(out.begin(), out.end());  // canonical order: dist, boson, fermion
  return out;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw config_error("config file '" + path + "' line " + std::to_string(lineno) +
                         ": expected key = value");
    const std::string key = canonical_key(trim(stripped.substr(0, eq)));
    const std::string value = trim(stripped.substr(eq + 1));

    if (key == "sigma") cfg.sigma = parse_double(value, key);
    else if (key == "sigma-bar") cfg.sigma_bar = parse_double(value, key);
    else if (key == "b") cfg.b = parse_double(value, key);
    else if (key == "x0") cfg.x0 = parse_double(value, key);
    else if (key == "tau-s") cfg.tau_s = parse_double(value, key);
    else if (key == "tau-d") cfg.tau_d = parse_double(value, key);
    else if (key == "x-fixed") cfg.x_fixed = parse_double(value, key);
    else if (key == "y-min") cfg.y_min = parse_double(value, key);
    else if (key == "y-max") cfg.y_max = parse_double(value, key);
    else if (key == "y-steps") cfg.y_steps = parse_int(value, key);
    else if (key == "sweep-min") cfg.sweep_min = parse_double(value, key);
    else if (key == "sweep-max") cfg.sweep_max = parse_double(value, key);
    else if (key == "sweep-steps") cfg.sweep_steps = parse_int(value, key);
    else if (key == "stats") cfg.stats = parse_stats_list(value);
    else if (key == "out") cfg.output_path = value;
    else
      throw config_error("config file '" + path + "' line " + std::to_string(lineno) +
                         ": unknown key '" + key + "'");
  }
}

}  // namespace twoslit
