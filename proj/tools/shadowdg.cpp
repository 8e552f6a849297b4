// Command-line driver for the DG / FV advection experiments.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "shadowdg/analysis/config.hpp"
#include "shadowdg/analysis/studies.hpp"

namespace fs = std::filesystem;
using namespace shadowdg;
using namespace shadowdg::analysis;

namespace {

struct CliOptions {
  std::string scheme = "dg-p2";
  std::string grids = "20,40,80,160,320";
  double cfl = 0.1;
  double periods = 1.0;
  std::string ic = "sine";
  std::string integrator = "ssprk3";
  std::string out = "results";
  std::uint64_t seed = 20240601;
  int degree = 1;
  int n_theta = 256;
  bool assert_mode = false;
};

RunConfig to_config(const CliOptions& o) {
  RunConfig cfg;
  cfg.scheme = parse_scheme(o.scheme);
  cfg.grids = parse_grid_list(o.grids);
  cfg.cfl = o.cfl;
  cfg.periods = o.periods;
  cfg.ic = parse_initial_condition(o.ic);
  cfg.integrator = parse_method(o.integrator);
  cfg.out_dir = o.out;
  cfg.seed = o.seed;
  cfg.validate();
  return cfg;
}

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  std::cout << "wrote " << path.string() << '\n';
}

bool check(bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << '\n';
  return ok;
}

int cmd_convergence(const CliOptions& o) {
  const RunConfig cfg = to_config(o);
  const ResultTable table = run_convergence(cfg);
  table.write_summary(std::cout);
  std::ostringstream csv;
  table.write_csv(csv);
  write_file(cfg.out_dir, std::string("convergence_") + to_string(cfg.scheme) + ".csv", csv.str());
  if (!o.assert_mode) return 0;
  bool ok = true;
  for (const auto& r : table.rows) ok &= check(!r.failed, "N=" + std::to_string(r.cells) + " completed");
  if (cfg.ic.smooth()) {
    const auto band = expected_order(cfg.scheme);
    const auto eoc = table.finest_eoc_l2();
    ok &= check(eoc && *eoc >= band.lo && *eoc <= band.hi,
                "finest EOC_L2 " + (eoc ? std::to_string(*eoc) : std::string("n/a")) + " in [" +
                    std::to_string(band.lo) + ", " + std::to_string(band.hi) + "]");
  }
  return ok ? 0 : 1;
}

int cmd_residual(const CliOptions& o) {
  const RunConfig cfg = to_config(o);
  const auto rows = run_residual(cfg);
  write_residual_summary(std::cout, rows);
  std::ostringstream csv;
  write_residual_csv(csv, rows);
  write_file(cfg.out_dir, "residual.csv", csv.str());
  if (!o.assert_mode) return 0;
  bool ok = true;
  for (const auto& r : rows) ok &= r.pass;
  return check(ok, "all measured coefficients within tolerance") ? 0 : 1;
}

int cmd_spectrum(const CliOptions& o) {
  const SpectrumReport rep = run_spectrum(o.degree, o.n_theta);
  std::cout << "k=" << rep.degree << " theta samples " << rep.theta.size() << "  max Re(lambda) = " << rep.max_real
            << '\n';
  std::ostringstream csv;
  write_spectrum_csv(csv, rep);
  write_file(o.out, "spectrum_k" + std::to_string(rep.degree) + ".csv", csv.str());
  if (!o.assert_mode) return 0;
  return check(rep.max_real <= 1e-12, "max Re(lambda) <= 1e-12") ? 0 : 1;
}

int cmd_correction(const CliOptions& o) {
  const CorrectionReport rep = run_correction(parse_grid_list(o.grids));
  for (const auto& r : rep.rows) {
    std::printf("N=%5d  max|C| %.6e  fit %.8f  richardson %s  ratio %s\n", r.cells, r.max_abs, r.fitted,
                r.extrapolated ? std::to_string(*r.extrapolated).c_str() : "-",
                r.ratio ? std::to_string(*r.ratio).c_str() : "-");
  }
  std::printf("coefficient 1/96: relative error %.3e, finest ratio %.4f\n", rep.relative_error, rep.final_ratio);
  std::ostringstream csv;
  write_correction_csv(csv, rep);
  write_file(o.out, "correction.csv", csv.str());
  if (!o.assert_mode) return 0;
  bool ok = check(rep.relative_error < 0.01, "fitted coefficient within 1% of 1/96");
  ok &= check(std::abs(rep.final_ratio - 4.0) <= 0.1, "max|C| grid-doubling ratio within 4.0 +- 0.1");
  return ok ? 0 : 1;
}

int cmd_compare(const CliOptions& o) {
  const RunConfig cfg = to_config(o);
  const auto tables = run_compare(cfg);
  for (const auto& t : tables) t.write_summary(std::cout);
  std::ostringstream csv;
  write_compare_csv(csv, tables);
  write_file(cfg.out_dir, "compare.csv", csv.str());
  return 0;
}

int cmd_taylor(const CliOptions& o) {
  std::ostringstream text;
  const auto lines = taylor_report();
  for (const auto& l : lines) text << l.text << '\n';
  const auto c = exact::correction_series();
  text << "correction: C = " << c[4].str() << "*h^2*u_xxxx + O(h^4)\n";
  std::cout << text.str();
  write_file(o.out, "taylor.txt", text.str());
  if (!o.assert_mode) return 0;

  bool ok = true;
  for (const auto& l : lines) {
    const auto& lead = l.pde.coefficient(l.coefficient + 1);
    const bool degenerate = l.degree == 1 && l.coefficient == 1 && l.mode == exact::InterfaceMode::UpwindTrace;
    if (degenerate) {
      ok &= check(lead.is_zero() && l.pde.coefficient(3) == exact::QF(exact::rational(-2, 5)),
                  l.text + "  (u_xx coefficient 0, h*u_xxx coefficient -2/5)");
    } else {
      ok &= check(lead == exact::QF(-1), l.text + "  (leading coefficient -1)");
    }
  }
  bool orders_vanish = true;
  for (int p = 0; p < 4; ++p) orders_vanish &= c[p].is_zero();
  ok &= check(orders_vanish && c[4] == exact::QF(exact::rational(1, 96)), "correction series = h^2 u_xxxx / 96");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DG/FV laboratory for 1D linear advection: convergence, modified equations, spectra"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "plain key=value file; command-line flags override it");

  CliOptions o;
  app.add_option("--scheme", o.scheme, "dg-p1|dg-p2|fv1|fv2-central|fv2-upwind")->capture_default_str();
  // Config files hand "20,40" over as a list; join it back for the grid parser.
  app.add_option("--grids", o.grids, "strictly increasing cell counts, e.g. 20,40,80")
      ->capture_default_str()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--cfl", o.cfl, "dt / dx")->capture_default_str();
  app.add_option("--periods", o.periods, "final time in advection periods")->capture_default_str();
  app.add_option("--ic", o.ic, "sine|gauss:SIGMA|step")->capture_default_str();
  app.add_option("--integrator", o.integrator, "euler|ssprk2|ssprk3")->capture_default_str();
  app.add_option("--out", o.out, "output directory")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--degree", o.degree, "polynomial degree for spectrum (0, 1, 2)")->capture_default_str();
  app.add_option("--n-theta", o.n_theta, "wavenumber samples for spectrum (>= 64)")->capture_default_str();
  app.add_flag("--assert", o.assert_mode, "check the expected results and exit nonzero on failure");

  auto* convergence = app.add_subcommand("convergence", "error table and observed orders for one scheme");
  auto* residual = app.add_subcommand("residual", "measured vs exact modified-equation coefficients");
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the DG Fourier symbol");
  auto* correction = app.add_subcommand("correction", "P2 slope-equation correction term study");
  auto* compare = app.add_subcommand("compare", "dg-p1 vs second-order finite volume");
  auto* taylor = app.add_subcommand("taylor", "exact modified equations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (convergence->parsed()) return cmd_convergence(o);
    if (residual->parsed()) return cmd_residual(o);
    if (spectrum->parsed()) return cmd_spectrum(o);
    if (correction->parsed()) return cmd_correction(o);
    if (compare->parsed()) return cmd_compare(o);
    if (taylor->parsed()) return cmd_taylor(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
