#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <future>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowdg/analysis/config.hpp"
#include "shadowdg/analysis/initial_condition.hpp"
#include "shadowdg/analysis/result_table.hpp"
#include "shadowdg/dg_operator.hpp"
#include "shadowdg/exact/taylor.hpp"
#include "shadowdg/fv_reference.hpp"
#include "shadowdg/mesh_basis.hpp"
#include "shadowdg/time_integrator.hpp"

namespace shadowdg::analysis {

namespace detail {

inline ErrorNorms average_errors(const AverageField& field, const AverageField& exact) {
  ErrorNorms e;
  const double dx = field.mesh().dx();
  double sq = 0.0;
  for (int j = 0; j < field.mesh().cells(); ++j) {
    const double d = std::abs(field[j] - exact[j]);
    e.l1 += dx * d;
    sq += dx * d * d;
    e.linf = std::max(e.linf, d);
  }
  e.l2 = std::sqrt(sq);
  return e;
}

inline ResultRow run_single(const RunConfig& cfg, Scheme scheme, int cells) {
  const auto start = std::chrono::steady_clock::now();
  const Mesh1D mesh(cells);
  const Integrator integrator{cfg.integrator, cfg.cfl, cfg.periods};
  const InitialCondition ic = cfg.ic;
  const auto exact = [ic, t = cfg.periods](double x) { return ic.exact(x, t); };

  ResultRow row;
  row.cells = cells;
  row.dx = mesh.dx();
  try {
    ErrorNorms e;
    if (is_dg(scheme)) {
      const int degree = scheme == Scheme::DgP1 ? 1 : 2;
      const auto result = integrate(project(ic, mesh, degree), [](const ModalField& f) { return rhs_matrix(f); },
                                    integrator, mesh.dx());
      e = error_norms(result.state, exact);
      row.steps = result.steps;
    } else {
      const AverageField u0 = AverageField::from_function(ic, mesh);
      IntegrationResult<AverageField> result{u0, 0};
      if (scheme == Scheme::Fv1) {
        result = integrate(u0, [](const AverageField& f) { return rhs_fv1(f); }, integrator, mesh.dx());
      } else {
        const SlopeChoice slope = scheme == Scheme::Fv2Central ? SlopeChoice::Central : SlopeChoice::UpwindBiased;
        result = integrate(u0, [slope](const AverageField& f) { return rhs_fv2(f, slope); }, integrator, mesh.dx());
      }
      e = average_errors(result.state, AverageField::from_function(exact, mesh));
      row.steps = result.steps;
    }
    row.l1 = e.l1;
    row.l2 = e.l2;
    row.linf = e.linf;
  } catch (const IntegrationError& err) {
    row.failed = true;
    row.steps = err.step();
    row.failure = err.what();
  }
  row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace detail

/// Integrate one scheme on every grid and tabulate errors against u0(x - t).
/// DG errors are L2-type norms of u_h; FV errors compare cell averages with exact averages.
/// Grids run concurrently; rows come back ordered by N.
inline ResultTable run_convergence(const RunConfig& cfg, std::optional<Scheme> scheme_override = std::nullopt) {
  cfg.validate();
  const Scheme scheme = scheme_override.value_or(cfg.scheme);
  std::vector<std::future<ResultRow>> jobs;
  for (int n : cfg.grids) jobs.push_back(std::async(std::launch::async, detail::run_single, cfg, scheme, n));
  ResultTable table;
  table.scheme = to_string(scheme);
  table.eoc_informational = !cfg.ic.smooth();
  for (auto& job : jobs) table.rows.push_back(job.get());
  table.compute_orders();
  return table;
}

/// Expected EOC_L2 band on the finest pair, for smooth data.
struct OrderBand {
  double lo;
  double hi;
};

inline OrderBand expected_order(Scheme s) {
  switch (s) {
    case Scheme::DgP1:
      return {1.7, 2.3};
    case Scheme::DgP2:
      return {2.7, 3.3};
    case Scheme::Fv1:
      return {0.9, 1.1};
    default:
      return {1.8, 2.2};
  }
}

// ---------------------------------------------------------------------------
// Instantaneous residual: measured vs exact modified-equation coefficients.

struct ResidualCase {
  int degree = 1;
  exact::InterfaceMode mode = exact::InterfaceMode::UpwindTrace;
  int coefficient = 0;  // m: which a_m
  int derivative = 1;   // p: which u^(p) term of d/dt u^(m)
  double tolerance = 0.01;
};

struct ResidualRow {
  ResidualCase c;
  std::string label;
  std::string exact_text;
  double exact = 0.0;
  int h_power = 0;
  std::vector<int> grids;
  std::vector<double> measured;             // per grid, least-squares fit
  std::vector<double> extrapolated;         // per consecutive pair, Richardson
  double final_estimate = 0.0;              // Richardson on the two finest grids
  double error = 0.0;                       // relative, or absolute when exact == 0
  bool relative = true;
  bool pass = false;
};

/// Coefficients cross-checked numerically: the degeneracy of the P1 slope equation, the
/// generic-flux law, and the P2 laws with their first correction terms.
inline std::vector<ResidualCase> default_residual_cases() {
  using exact::InterfaceMode;
  return {
      {1, InterfaceMode::UpwindTrace, 0, 1, 0.001},  //
      {1, InterfaceMode::UpwindTrace, 1, 2, 0.01},   //
      {1, InterfaceMode::UpwindTrace, 1, 3, 0.01},   //
      {1, InterfaceMode::ExactPoint, 1, 2, 0.01},    //
      {2, InterfaceMode::UpwindTrace, 1, 2, 0.01},   //
      {2, InterfaceMode::UpwindTrace, 1, 3, 0.01},   //
      {2, InterfaceMode::UpwindTrace, 2, 3, 0.01},   //
      {2, InterfaceMode::UpwindTrace, 2, 4, 0.01},   //
      {2, InterfaceMode::ExactPoint, 1, 2, 0.01},    //
      {2, InterfaceMode::ExactPoint, 2, 3, 0.01},    //
  };
}

/// For each grid: evaluate da_m/dt of the projected sine, normalize by the leading scale of
/// a_m, subtract the exact lower-order terms, and least-squares fit the remaining h^e u^(p)
/// term over all cells. Odd neighbours of the target are orthogonal to it on a periodic sine
/// grid, so successive estimates are extrapolated assuming an O(h^2) error.
inline ResidualRow measure_residual(const ResidualCase& rc, const std::vector<int>& grids) {
  const auto spec = exact::make_stencil(rc.degree, rc.mode);
  const auto law = exact::evolution_law(spec, rc.coefficient);
  const double scale = spec.moments[static_cast<std::size_t>(rc.coefficient)][rc.coefficient].to_double();
  const int m = rc.coefficient;

  ResidualRow row;
  row.c = rc;
  row.label = "k=" + std::to_string(rc.degree) + " " + exact::to_string(rc.mode) + " a" + std::to_string(m) + " " +
              exact::derivative_name(rc.derivative);
  const auto& target = law.terms.at(static_cast<std::size_t>(rc.derivative));
  row.exact_text = target.coefficient.str();
  row.exact = target.coefficient.to_double();
  row.h_power = target.h_power;
  row.relative = row.exact != 0.0;
  row.grids = grids;

  const auto u = [](double x) { return std::sin(2.0 * std::numbers::pi * x); };
  for (int n : grids) {
    const Mesh1D mesh(n);
    const double h = mesh.dx();
    const ModalField field = project(u, mesh, rc.degree);
    const ModalField rate = rc.mode == exact::InterfaceMode::UpwindTrace
                                ? rhs_matrix(field)
                                : rhs_weak(field, ExactInterface::steady(u));
    double num = 0.0, den = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = mesh.center(j);
      double rem = rate(j, m) / (scale * std::pow(h, m));
      for (int p = 0; p < rc.derivative; ++p) {
        const auto& t = law.terms[static_cast<std::size_t>(p)];
        rem -= t.coefficient.to_double() * std::pow(h, t.h_power) * sine_derivative(p, x);
      }
      const double g = std::pow(h, target.h_power) * sine_derivative(rc.derivative, x);
      num += rem * g;
      den += g * g;
    }
    row.measured.push_back(num / den);
  }
  for (std::size_t i = 1; i < row.measured.size(); ++i)
    row.extrapolated.push_back((4.0 * row.measured[i] - row.measured[i - 1]) / 3.0);
  row.final_estimate = row.extrapolated.empty() ? row.measured.back() : row.extrapolated.back();
  row.error = row.relative ? std::abs(row.final_estimate - row.exact) / std::abs(row.exact)
                           : std::abs(row.final_estimate - row.exact);
  row.pass = row.error <= rc.tolerance;
  return row;
}

inline std::vector<ResidualRow> run_residual(const RunConfig& cfg,
                                             const std::vector<ResidualCase>& cases = default_residual_cases()) {
  cfg.validate();
  if (cfg.ic.kind != InitialCondition::Kind::Sine) throw std::invalid_argument("residual study requires sine data");
  if (cfg.grids.size() < 2 || !cfg.grids_doubling())
    throw std::invalid_argument("residual study requires a doubling grid sequence of at least two grids");
  std::vector<ResidualRow> rows;
  for (const auto& c : cases) rows.push_back(measure_residual(c, cfg.grids));
  return rows;
}

inline void write_residual_csv(std::ostream& os, const std::vector<ResidualRow>& rows) {
  os << "case,N,measured,richardson,exact,error,error_kind\n";
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.grids.size(); ++i) {
      os << r.label << ',' << r.grids[i] << ',' << format_number(r.measured[i]) << ','
         << format_number(i > 0 ? std::optional<double>(r.extrapolated[i - 1]) : std::nullopt) << ','
         << format_number(r.exact) << ',';
      if (i + 1 == r.grids.size()) os << format_number(r.error) << ',' << (r.relative ? "relative" : "absolute");
      else os << ',';
      os << '\n';
    }
}

inline void write_residual_summary(std::ostream& os, const std::vector<ResidualRow>& rows) {
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-26s h^%d  exact %-8s measured %+.8f  %s err %.2e  [%s]\n", r.label.c_str(),
                  r.h_power, r.exact_text.c_str(), r.final_estimate, r.relative ? "rel" : "abs", r.error,
                  r.pass ? "PASS" : "FAIL");
    os << buf;
  }
}

// ---------------------------------------------------------------------------
// Spectrum of the block-circulant upwind operator.

struct SpectrumReport {
  int degree = 0;
  std::vector<double> theta;
  std::vector<std::vector<std::complex<double>>> eigenvalues;
  double max_real = -1e300;
};

inline SpectrumReport run_spectrum(int degree, int n_theta) {
  if (n_theta < 64) throw std::invalid_argument("spectrum: need at least 64 theta samples");
  SpectrumReport rep;
  rep.degree = degree;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / n_theta;
    rep.theta.push_back(theta);
    rep.eigenvalues.push_back(symbol_eigenvalues(theta, degree));
    for (auto z : rep.eigenvalues.back()) rep.max_real = std::max(rep.max_real, z.real());
  }
  return rep;
}

inline void write_spectrum_csv(std::ostream& os, const SpectrumReport& rep) {
  os << "theta";
  for (int i = 0; i <= rep.degree; ++i) os << ",re_" << i << ",im_" << i;
  os << '\n';
  for (std::size_t r = 0; r < rep.theta.size(); ++r) {
    os << format_number(rep.theta[r]);
    for (auto z : rep.eigenvalues[r]) os << ',' << format_number(z.real()) << ',' << format_number(z.imag());
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Correction term C = 2(U+ + U- - 2U)/dx^2 - U_xx/2 ~ u_xxxx dx^2 / 96.

struct CorrectionRow {
  int cells = 0;
  double dx = 0.0;
  double max_abs = 0.0;
  double fitted = 0.0;                 // least-squares C / (dx^2 u_xxxx)
  std::optional<double> extrapolated;  // Richardson with the previous grid
  std::optional<double> ratio;         // max|C| previous / current
};

struct CorrectionReport {
  std::vector<CorrectionRow> rows;
  double exact = 1.0 / 96.0;
  double relative_error = 0.0;
  double final_ratio = 0.0;
};

inline CorrectionReport run_correction(const std::vector<int>& grids) {
  if (grids.empty()) throw std::invalid_argument("correction: empty grid list");
  const double w = 2.0 * std::numbers::pi;
  const auto u = [w](double x) { return std::sin(w * x); };
  const auto u_xx = [w](double x) { return -w * w * std::sin(w * x); };
  CorrectionReport rep;
  for (int n : grids) {
    const Mesh1D mesh(n);
    const double h = mesh.dx();
    CorrectionRow row;
    row.cells = n;
    row.dx = h;
    double num = 0.0, den = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = mesh.center(j);
      const double c = correction_term(u, u_xx, x, h);
      const double g = h * h * sine_derivative(4, x);
      row.max_abs = std::max(row.max_abs, std::abs(c));
      num += c * g;
      den += g * g;
    }
    row.fitted = num / den;
    if (!rep.rows.empty()) {
      const auto& prev = rep.rows.back();
      const double r = static_cast<double>(n) / prev.cells;
      row.extrapolated = (r * r * row.fitted - prev.fitted) / (r * r - 1.0);
      row.ratio = prev.max_abs / row.max_abs;
    }
    rep.rows.push_back(row);
  }
  const auto& last = rep.rows.back();
  const double estimate = last.extrapolated.value_or(last.fitted);
  rep.relative_error = std::abs(estimate - rep.exact) / rep.exact;
  rep.final_ratio = last.ratio.value_or(0.0);
  return rep;
}

inline void write_correction_csv(std::ostream& os, const CorrectionReport& rep) {
  os << "N,dx,max_abs_C,fitted_coefficient,richardson,ratio\n";
  for (const auto& r : rep.rows)
    os << r.cells << ',' << format_number(r.dx) << ',' << format_number(r.max_abs) << ',' << format_number(r.fitted)
       << ',' << format_number(r.extrapolated) << ',' << format_number(r.ratio) << '\n';
}

// ---------------------------------------------------------------------------
// DG-P1 against the two second-order FV baselines.

inline std::vector<ResultTable> run_compare(const RunConfig& cfg) {
  std::vector<ResultTable> tables;
  for (Scheme s : {Scheme::DgP1, Scheme::Fv2Central, Scheme::Fv2Upwind}) tables.push_back(run_convergence(cfg, s));
  return tables;
}

inline void write_compare_csv(std::ostream& os, const std::vector<ResultTable>& tables) {
  os << "N,dx";
  for (const auto& t : tables)
    for (const char* col : {"L1", "L2", "Linf", "EOC_L1", "EOC_L2", "EOC_Linf"}) os << ',' << t.scheme << '_' << col;
  os << ",status\n";
  if (tables.empty()) return;
  for (std::size_t r = 0; r < tables.front().rows.size(); ++r) {
    os << tables.front().rows[r].cells << ',' << format_number(tables.front().rows[r].dx);
    bool failed = false;
    for (const auto& t : tables) {
      const auto& row = t.rows[r];
      failed = failed || row.failed;
      if (row.failed) {
        os << ",,,,,,";
        continue;
      }
      os << ',' << format_number(row.l1) << ',' << format_number(row.l2) << ',' << format_number(row.linf) << ','
         << format_number(row.eoc_l1) << ',' << format_number(row.eoc_l2) << ',' << format_number(row.eoc_linf);
    }
    os << ',' << (failed ? "failed" : tables.front().eoc_informational ? "informational" : "ok") << '\n';
  }
}

// ---------------------------------------------------------------------------
// Exact modified equations.

struct TaylorLine {
  int degree;
  exact::InterfaceMode mode;
  int coefficient;
  exact::ModifiedPde pde;
  std::string text;
};

inline std::vector<TaylorLine> taylor_report() {
  std::vector<TaylorLine> lines;
  for (int k : {1, 2})
    for (auto mode : {exact::InterfaceMode::UpwindTrace, exact::InterfaceMode::ExactPoint}) {
      const auto spec = exact::make_stencil(k, mode);
      for (int m = 0; m <= k; ++m) {
        auto pde = exact::evolution_law(spec, m);
        std::string text = "k=" + std::to_string(k) + " " + exact::to_string(mode) + " a" + std::to_string(m) + ": " +
                           exact::format_statement(pde);
        lines.push_back({k, mode, m, std::move(pde), std::move(text)});
      }
    }
  return lines;
}

}  // namespace shadowdg::analysis
