#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace shadowdg::analysis {

/// Scientific notation with 16 significant digits; empty for missing values.
inline std::string format_number(std::optional<double> v) {
  if (!v) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", *v);
  return buf;
}

struct ResultRow {
  int cells = 0;
  double dx = 0.0;
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
  std::optional<double> eoc_l1, eoc_l2, eoc_linf;
  long steps = 0;
  double wall_time = 0.0;  // seconds; summary only, never written to CSV
  bool failed = false;
  std::string failure;
};

/// Observed order between two successive rows: log(e_prev/e) / log(N/N_prev).
inline std::optional<double> observed_order(double e_prev, double e, int n_prev, int n) {
  if (!(e_prev > 0.0) || !(e > 0.0) || n_prev <= 0 || n <= n_prev) return std::nullopt;
  return std::log(e_prev / e) / std::log(static_cast<double>(n) / n_prev);
}

struct ResultTable {
  std::string scheme;
  std::vector<ResultRow> rows;  // ordered by N
  bool eoc_informational = false;

  /// Fill the EOC columns from the error columns; the first and failed rows stay blank.
  void compute_orders() {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto& row = rows[r];
      row.eoc_l1 = row.eoc_l2 = row.eoc_linf = std::nullopt;
      if (r == 0 || row.failed || rows[r - 1].failed) continue;
      const auto& prev = rows[r - 1];
      row.eoc_l1 = observed_order(prev.l1, row.l1, prev.cells, row.cells);
      row.eoc_l2 = observed_order(prev.l2, row.l2, prev.cells, row.cells);
      row.eoc_linf = observed_order(prev.linf, row.linf, prev.cells, row.cells);
    }
  }

  /// EOC_L2 of the finest successful pair.
  std::optional<double> finest_eoc_l2() const {
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
      if (it->eoc_l2) return it->eoc_l2;
    return std::nullopt;
  }

  static const char* csv_header() { return "N,dx,L1,L2,Linf,EOC_L1,EOC_L2,EOC_Linf,steps,status"; }

  void write_csv(std::ostream& os) const {
    os << csv_header() << '\n';
    for (const auto& r : rows) {
      os << r.cells << ',' << format_number(r.dx) << ',';
      if (r.failed) {
        os << ",,,,,," << r.steps << ",failed\n";
        continue;
      }
      os << format_number(r.l1) << ',' << format_number(r.l2) << ',' << format_number(r.linf) << ','
         << format_number(r.eoc_l1) << ',' << format_number(r.eoc_l2) << ',' << format_number(r.eoc_linf) << ','
         << r.steps << ',' << (eoc_informational ? "informational" : "ok") << '\n';
    }
  }

  void write_summary(std::ostream& os) const {
    char buf[256];
    os << "scheme " << scheme << (eoc_informational ? "  (non-smooth data: EOC informational)" : "") << '\n';
    os << "     N        L1            L2            Linf       EOC_L2   steps   wall[s]\n";
    for (const auto& r : rows) {
      if (r.failed) {
        std::snprintf(buf, sizeof buf, "%6d  FAILED: %s\n", r.cells, r.failure.c_str());
      } else {
        std::snprintf(buf, sizeof buf, "%6d  %.6e  %.6e  %.6e  %6s  %6ld  %8.3f\n", r.cells, r.l1, r.l2, r.linf,
                      r.eoc_l2 ? std::to_string(*r.eoc_l2).substr(0, 6).c_str() : "-", r.steps, r.wall_time);
      }
      os << buf;
    }
  }
};

}  // namespace shadowdg::analysis
