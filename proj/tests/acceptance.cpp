// Acceptance gate: one pass/fail line per criterion, pinned tolerances.
// argv[1] is the path of the command-line binary (used by criterion 9).
// Exit code 0 iff every criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twoslit/validate.hpp"

namespace fs = std::filesystem;
using namespace twoslit;
using cplx = std::complex<double>;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

void note(const std::string& text) { std::printf("       note: %s\n", text.c_str()); }

double relative_deviation(double a, double b, double assembly_scale) {
  const double denom = std::max({std::abs(a), std::abs(b), assembly_scale, 1e-300});
  return std::abs(a - b) / denom;
}

QuadratureSpec tight_spec() {
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-11;
  return spec;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_command(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  return (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
}

const SlitGeometry kGeom{0.1, 0.4};

TwoParticleSystem system_for(double sigma, double sigma_bar) {
  return make_two_particle_system({sigma, 0.2, 0.2}, {sigma_bar, 0.2, 0.2}, kGeom);
}

struct PatternSet {
  std::vector<double> dist, boson, fermion;
};

PatternSet patterns_on(const std::vector<double>& grid, const TwoParticleSystem& sys) {
  PatternSet p;
  p.dist = fixed_detector_pattern(grid, sys, Statistics::distinguishable).density;
  p.boson = fixed_detector_pattern(grid, sys, Statistics::boson).density;
  p.fermion = fixed_detector_pattern(grid, sys, Statistics::fermion).density;
  return p;
}

void criterion_1() {
  const double t0 = now_seconds();
  const CheckResult r = check_fourier_consistency(RunConfig{});
  const double dt = now_seconds() - t0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max relative deviation %.3e (tol 1e-08), %.2f s (budget 1 s)", r.measured,
                dt);
  report(1, "free-packet closed form matches Fourier synthesis", r.pass && dt < 1.0, buf);
}

void criterion_2() {
  const double t0 = now_seconds();
  const QuadratureSpec spec = tight_spec();
  double worst = 0.0;
  for (const double sigma : {1.0, 2.0}) {
    const PacketParams p{sigma, 0.2, 0.2};
    const BeamCoefficients c = slit_beam_coefficients(p, kGeom, Slit::A);
    for (const Slit slit : {Slit::A, Slit::B}) {
      for (const double x : uniform_grid(-2.0, 2.0, 21)) {
        const cplx closed = slit_amplitude(x, c, slit);
        const cplx direct = oracle::slit_amplitude_by_quadrature(x, p, kGeom, slit, spec);
        const double modulus = std::abs(std::abs(closed) - std::abs(direct)) / std::abs(direct);
        const double phase = std::abs(std::arg(closed / direct));
        worst = std::max({worst, modulus, phase});
      }
    }
  }
  const double dt = now_seconds() - t0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "worst modulus/phase deviation %.3e (tol 1e-06) at 21 points, both slits, "
                "both particles, %.2f s (budget 5 s)",
                worst, dt);
  report(2, "slit beams match direct aperture integration", worst < 1e-6 && dt < 5.0, buf);
}

void criterion_3() {
  const QuadratureSpec spec = tight_spec();
  double worst_1d = 0.0;
  for (const double sigma : {1.0, 2.0, 4.0}) {
    const DiffractedState s = diffracted_state({sigma, 0.2, 0.2}, kGeom);
    worst_1d = std::max(worst_1d, std::abs(oracle::state_norm_by_quadrature(s, spec) - 1.0));
  }
  QuadratureSpec spec2d;
  spec2d.abs_tol = 1e-9;
  spec2d.rel_tol = 1e-8;
  double worst_2d = 0.0;
  for (const double sigma_bar : {2.0, 4.0}) {
    const TwoParticleSystem sys = system_for(1.0, sigma_bar);
    for (const Statistics stat :
         {Statistics::distinguishable, Statistics::boson, Statistics::fermion}) {
      const double total = oracle::density_normalization_2d(sys, stat, spec2d);
      worst_2d = std::max(worst_2d, std::abs(total - 1.0));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "worst |norm-1|: single %.3e (tol 1e-08), joint %.3e (tol 1e-06), "
                "three statistics, both widths",
                worst_1d, worst_2d);
  report(3, "single and joint densities normalize to one", worst_1d < 1e-8 && worst_2d < 1e-6,
         buf);
}

void criterion_4() {
  const TwoParticleSystem sys = system_for(1.0, 2.0);
  std::mt19937 rng(20260818u);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  double worst_points = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = coord(rng);
    const double y = coord(rng);
    for (const Statistics stat : {Statistics::boson, Statistics::fermion}) {
      const double n = joint_norm(sys.overlap_sq, stat);
      const double scale = 2.0 * n * n * oracle::exchange_expansion_scale(x, y, sys);
      worst_points = std::max(
          worst_points,
          relative_deviation(joint_density(x, y, sys, stat),
                             oracle::joint_density_by_exchange_expansion(x, y, sys, stat),
                             scale));
    }
  }
  const std::vector<double> grid = RunConfig{}.y_grid();
  double worst_slices = 0.0;
  for (const Statistics stat :
       {Statistics::distinguishable, Statistics::boson, Statistics::fermion}) {
    const std::vector<double> slice = fixed_detector_pattern(grid, sys, stat).density;
    const double n = joint_norm(sys.overlap_sq, stat);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double scale = 2.0 * n * n * distinguishable_slice(grid[i], sys);
      worst_slices = std::max(
          worst_slices,
          relative_deviation(slice[i], joint_density(0.0, grid[i], sys, stat), scale));
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "exchange expansion at 50 random points %.3e, x=0 slices on the %zu-point "
                "grid %.3e (tol 1e-12)",
                worst_points, grid.size(), worst_slices);
  report(4, "density assemblies agree across independent expansions",
         worst_points < 1e-12 && worst_slices < 1e-12, buf);
}

void criterion_5() {
  struct Entry {
    double sigma_bar, quoted, window;
  };
  const Entry entries[4] = {
      {0.1, 0.99, 0.01}, {0.5, 0.99, 0.01}, {2.0, 0.99, 0.01}, {4.0, 0.39, 0.02}};
  bool all_ok = true;
  std::string summary;
  std::vector<std::string> notes;
  for (const Entry& e : entries) {
    const TwoParticleSystem sys = system_for(1.0, e.sigma_bar);
    const cplx direct = oracle::overlap_by_quadrature(sys.psi, sys.phi, tight_spec());
    const double agreement = std::abs(sys.overlap - direct) / std::abs(direct);
    const bool in_window = std::abs(sys.overlap_sq - e.quoted) <= e.window;
    const bool agrees = agreement < 1e-6;
    all_ok = all_ok && (in_window || agrees);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ssb=%g:|ov|^2=%.5f", summary.empty() ? "" : " ",
                  e.sigma_bar, sys.overlap_sq);
    summary += buf;
    if (!in_window) {
      char nbuf[320];
      std::snprintf(nbuf, sizeof nbuf,
                    "sigma_bar=%g measures %.5f vs quoted reference %.2f; closed form and "
                    "quadrature agree to %.1e, so the mismatch is recorded as a reference "
                    "discrepancy and the criterion passes by the stated agreement clause",
                    e.sigma_bar, sys.overlap_sq, e.quoted, agreement);
      notes.push_back(nbuf);
      all_ok = all_ok && agrees;
    }
  }
  report(5, "post-slit overlap magnitudes against the quoted references", all_ok,
         summary + " (windows 0.99+-0.01, 0.39+-0.02; agreement clause tol 1e-06)");
  for (const std::string& n : notes) note(n);
}

void criterion_6() {
  const std::vector<double> grid = RunConfig{}.y_grid();
  const PatternSet p2 = patterns_on(grid, system_for(1.0, 2.0));
  const PatternSet p4 = patterns_on(grid, system_for(1.0, 4.0));
  double peak2 = 0.0, dev_b2 = 0.0, dev_f2 = 0.0, dev_b4 = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    peak2 = std::max(peak2, p2.dist[i]);
    dev_b2 = std::max(dev_b2, std::abs(p2.boson[i] - p2.dist[i]));
    dev_f2 = std::max(dev_f2, std::abs(p2.fermion[i] - p2.dist[i]));
    dev_b4 = std::max(dev_b4, std::abs(p4.boson[i] - p4.dist[i]));
  }
  const bool regime1 = dev_b2 <= 0.05 * peak2 && dev_f2 >= 5.0 * dev_b2;
  const bool regime2 = dev_b4 >= 5.0 * dev_b2;
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "regime I: boson dev %.3e <= 0.05*peak %.3e and fermion/boson %.1f >= 5 "
                "(%s); regime II: boson dev ratio wide/narrow %.5f >= 5 (%s)",
                dev_b2, 0.05 * peak2, dev_f2 / dev_b2, regime1 ? "ok" : "violated",
                dev_b4 / dev_b2, regime2 ? "ok" : "violated");
  report(6, "interference-deviation regimes", regime1 && regime2, buf);
  if (!regime2) {
    note("the wide-packet boson deviation grows by the measured factor above, not 5x; "
         "the post-slit overlap stays near one for both widths (0.996 and 0.985), which "
         "caps the exchange term. The closed forms and the quadrature oracle agree at "
         "every point, so the quoted fivefold growth is not reproduced by the stated "
         "model. Recorded as an honest failure; details in README.");
  }
}

void criterion_7() {
  const TwoParticleSystem sys = system_for(1.0, 2.0);
  double worst_diag = 0.0;
  for (const double x : uniform_grid(-2.0, 2.0, 21))
    worst_diag = std::max(worst_diag, joint_density(x, x, sys, Statistics::fermion));

  const std::vector<double> grid = RunConfig{}.y_grid();
  const PatternSet base = patterns_on(grid, sys);
  const PatternSet swapped = patterns_on(grid, system_for(2.0, 1.0));
  const double n_b = joint_norm(sys.overlap_sq, Statistics::boson);
  const double n_f = joint_norm(sys.overlap_sq, Statistics::fermion);
  double worst_parity = 0.0, worst_relabel = 0.0;
  const std::size_t last = grid.size() - 1;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double scale_d = 2.0 * distinguishable_slice(grid[i], sys);
    const double scale_b = n_b * n_b * scale_d;
    const double scale_f = n_f * n_f * scale_d;
    worst_parity = std::max(
        {worst_parity, relative_deviation(base.dist[i], base.dist[last - i], scale_d),
         relative_deviation(base.boson[i], base.boson[last - i], scale_b),
         relative_deviation(base.fermion[i], base.fermion[last - i], scale_f)});
    worst_relabel = std::max(
        {worst_relabel, relative_deviation(base.dist[i], swapped.dist[i], scale_d),
         relative_deviation(base.boson[i], swapped.boson[i], scale_b),
         relative_deviation(base.fermion[i], swapped.fermion[i], scale_f)});
  }

  const TwoParticleSystem equal = system_for(1.0, 1.0);
  const std::vector<double> dist_eq =
      fixed_detector_pattern(grid, equal, Statistics::distinguishable).density;
  const std::vector<double> boson_eq =
      fixed_detector_pattern(grid, equal, Statistics::boson).density;
  double worst_equal = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    worst_equal = std::max(worst_equal, relative_deviation(boson_eq[i], dist_eq[i],
                                                           2.0 * dist_eq[i]));
  bool fermion_errors = false;
  try {
    fixed_detector_pattern(grid, equal, Statistics::fermion);
  } catch (const degenerate_fermion_error&) {
    fermion_errors = true;
  }

  const bool pass = worst_diag < 1e-14 && worst_parity <= 1e-12 && worst_relabel <= 1e-12 &&
                    worst_equal <= 1e-12 && fermion_errors;
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "fermion diagonal %.1e (tol 1e-14), parity %.1e, relabeling %.1e, "
                "boson=distinguishable at equal widths %.1e (tol 1e-12), degenerate fermion "
                "errors: %s",
                worst_diag, worst_parity, worst_relabel, worst_equal,
                fermion_errors ? "yes" : "no");
  report(7, "exchange symmetry properties", pass, buf);
}

void criterion_8() {
  bool ok = true;
  std::string summary;
  for (const double sigma_bar : {0.1, 0.5}) {
    const TwoParticleSystem sys = system_for(1.0, sigma_bar);
    const double before = initial_overlap(1.0, sigma_bar);
    ok = ok && sys.overlap_sq > before;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ssb=%g: %.5f -> %.5f", summary.empty() ? "" : "; ",
                  sigma_bar, before, sys.overlap_sq);
    summary += buf;
  }
  report(8, "diffraction amplifies the state overlap", ok, summary);
}

void criterion_9(const char* cli) {
  if (cli == nullptr) {
    report(9, "command-line end-to-end determinism", false,
           "no CLI path was passed as argv[1]");
    return;
  }
  const fs::path dir_a = fs::temp_directory_path() / "twoslit_accept_a";
  const fs::path dir_b = fs::temp_directory_path() / "twoslit_accept_b";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
  fs::create_directories(dir_a);
  fs::create_directories(dir_b);
  const std::string quoted = std::string("\"") + cli + "\"";

  const auto run_all = [&quoted](const fs::path& dir) {
    int worst = 0;
    for (const char* args : {"figure 1", "figure 2", "figure 3"}) {
      const int rc = run_command("cd " + dir.string() + " && " + quoted + " " + args +
                                 " > cmd.out 2> cmd.err");
      worst = std::max(worst, rc);
    }
    const int rc = run_command("cd " + dir.string() + " && " + quoted +
                               " validate > validate.out 2> validate.err");
    return std::max(worst, rc);
  };

  const double t0 = now_seconds();
  const int rc_a = run_all(dir_a);
  const double dt = now_seconds() - t0;
  const int rc_b = run_all(dir_b);

  bool identical = true;
  for (const char* name : {"figure1.csv", "figure2.csv", "figure3.csv", "validate.out"}) {
    const std::string a = slurp(dir_a / name);
    const std::string b = slurp(dir_b / name);
    identical = identical && !a.empty() && a == b;
  }
  const bool pass = rc_a == 0 && rc_b == 0 && identical && dt < 30.0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "figures 1-3 + validate: exit %d, %.1f s (budget 30 s), repeat exit %d, "
                "outputs byte-identical: %s",
                rc_a, dt, rc_b, identical ? "yes" : "no");
  report(9, "command-line end-to-end determinism", pass, buf);
}

}  // namespace

int main(int argc, char** argv) {
  // Criterion 9 runs the binary from temporary directories, so the path must survive a chdir.
  std::string cli_abs;
  if (argc > 1) cli_abs = fs::absolute(argv[1]).string();
  const char* cli = argc > 1 ? cli_abs.c_str() : nullptr;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9(cli);
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
