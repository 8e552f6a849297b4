#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowdg/exact/derivative_series.hpp"
#include "shadowdg/exact/polynomial.hpp"
#include "shadowdg/exact/qf.hpp"
#include "shadowdg/update_matrices.hpp"

namespace shadowdg::exact {

/// Taylor-table expansion of the L2 projection coefficients of a smooth u:
///   a_m = sum_p u^(p) h^p / p! * (int phi_m xi^p) / (int phi_m^2).
/// One series per coefficient, exact through the truncation order.
inline std::vector<DerivativeSeries> basis_moments(int degree, int truncation = kDefaultTruncation) {
  const auto basis = exact_basis(degree);
  std::vector<DerivativeSeries> out;
  for (const auto& phi : basis) {
    const QF mass = integrate(phi * phi);
    DerivativeSeries s(truncation);
    for (int p = 0; p <= truncation; ++p) {
      XiPolynomial monomial;
      monomial.coeffs.assign(static_cast<std::size_t>(p) + 1, QF{});
      monomial.coeffs.back() = QF(1);
      s.set(p, integrate(phi * monomial) / mass / factorial(static_cast<unsigned>(p)));
    }
    out.push_back(std::move(s));
  }
  return out;
}

enum class InterfaceMode {
  UpwindTrace,  // interface value is the left cell's right trace
  ExactPoint,   // interface value is the exact u(x_j +- h/2)
};

inline const char* to_string(InterfaceMode mode) {
  return mode == InterfaceMode::UpwindTrace ? "upwind" : "exact-flux";
}

/// Everything needed to Taylor-expand one coefficient-update stencil.
struct StencilSpec {
  int degree = 1;
  UpdateMatrices matrices;
  std::vector<QF> right_test;  // phi_m(+1/2) / M_m
  std::vector<QF> left_test;   // phi_m(-1/2) / M_m
  std::vector<QF> trace;       // phi_n(+1/2), so u_h(x_{j+1/2}^-) = trace . a^j
  std::vector<DerivativeSeries> moments;
  InterfaceMode mode = InterfaceMode::UpwindTrace;
  int truncation = kDefaultTruncation;
};

inline StencilSpec make_stencil(int degree, InterfaceMode mode, int truncation = kDefaultTruncation) {
  StencilSpec spec;
  spec.degree = degree;
  spec.matrices = update_matrices(degree);
  spec.moments = basis_moments(degree, truncation);
  spec.mode = mode;
  spec.truncation = truncation;
  const BigRational half(1, 2);
  for (const auto& phi : exact_basis(degree)) {
    const BigRational mass = integrate(phi * phi).rational_part();
    spec.right_test.push_back(phi.at(half) / mass);
    spec.left_test.push_back(phi.at(-half) / mass);
    spec.trace.push_back(phi.at(half));
  }
  return spec;
}

/// Symbolic da_m/dt at x_j for every m, for data that is the projection of a smooth u.
///
/// UpwindTrace:  da/dt = -(1/h) [A a(x) - B a(x - h)].
/// ExactPoint:   da/dt = -(1/h) [(A - r t^T) a(x) + r u(x + h/2) - l u(x - h/2)],
/// where A - r t^T is minus the mass-scaled volume matrix. The result carries h offset -1.
inline std::vector<DerivativeSeries> modified_equation(const StencilSpec& spec) {
  if (spec.truncation < 5) throw std::invalid_argument("modified_equation: truncation order must be >= 5");
  const int n = spec.degree + 1;
  const int P = spec.truncation;
  std::vector<DerivativeSeries> shifted;
  shifted.reserve(static_cast<std::size_t>(n));
  for (const auto& a : spec.moments) shifted.push_back(shift(a, BigRational(-1)));
  const DerivativeSeries unit = DerivativeSeries::term(0, QF(1), P);
  const DerivativeSeries u_right = shift(unit, BigRational(1, 2));
  const DerivativeSeries u_left = shift(unit, BigRational(-1, 2));

  std::vector<DerivativeSeries> out;
  for (int m = 0; m < n; ++m) {
    DerivativeSeries s(P);
    for (int j = 0; j < n; ++j) {
      if (spec.mode == InterfaceMode::UpwindTrace) {
        s += spec.matrices.A(m, j) * spec.moments[static_cast<std::size_t>(j)];
        s -= spec.matrices.B(m, j) * shifted[static_cast<std::size_t>(j)];
      } else {
        const QF volume = spec.matrices.A(m, j) - spec.right_test[static_cast<std::size_t>(m)] *
                                                      spec.trace[static_cast<std::size_t>(j)];
        s += volume * spec.moments[static_cast<std::size_t>(j)];
      }
    }
    if (spec.mode == InterfaceMode::ExactPoint) {
      s += spec.right_test[static_cast<std::size_t>(m)] * u_right;
      s -= spec.left_test[static_cast<std::size_t>(m)] * u_left;
    }
    s *= QF(-1);
    s.divide_by_h(1);
    out.push_back(std::move(s));
  }
  return out;
}

/// One term  coefficient * h^h_power * u^(derivative).
struct PdeTerm {
  int derivative = 0;
  QF coefficient;
  int h_power = 0;
};

/// d/dt u^(time_derivative) = sum of terms + O(h^remainder_power).
struct ModifiedPde {
  int time_derivative = 0;
  std::vector<PdeTerm> terms;
  int remainder_power = 0;

  /// Coefficient of u^(derivative); the h power is implied by the derivative order.
  const QF& coefficient(int derivative) const {
    for (const auto& t : terms)
      if (t.derivative == derivative) return t.coefficient;
    throw std::out_of_range("ModifiedPde: derivative order " + std::to_string(derivative) + " beyond truncation");
  }
};

class DerivationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalize a da_m/dt series by the leading scale of a_m (a_m ~ scale * u^(m) h^m)
/// into a statement about d/dt u^(m). Every coefficient must come out rational.
inline ModifiedPde as_modified_pde(const DerivativeSeries& rate, int m, const QF& leading_scale) {
  if (leading_scale.is_zero()) throw std::invalid_argument("as_modified_pde: zero leading scale");
  ModifiedPde pde;
  pde.time_derivative = m;
  for (int p = 0; p <= rate.truncation(); ++p) {
    PdeTerm t{p, rate[p] / leading_scale, rate.h_power(p) - m};
    if (!t.coefficient.is_rational())
      throw DerivationFailure("as_modified_pde: irrational coefficient " + t.coefficient.str() + " on u^(" +
                              std::to_string(p) + ")");
    pde.terms.push_back(std::move(t));
  }
  pde.remainder_power = rate.h_power(rate.truncation() + 1) - m;
  return pde;
}

/// Convenience: the normalized evolution law of coefficient m of a stencil.
inline ModifiedPde evolution_law(const StencilSpec& spec, int m) {
  const auto rates = modified_equation(spec);
  return as_modified_pde(rates.at(static_cast<std::size_t>(m)), m,
                         spec.moments.at(static_cast<std::size_t>(m))[m]);
}

/// Expansion of C = 2 (u(x+h/2) + u(x-h/2) - 2u(x)) / h^2 - u''(x)/2, with h offset -2.
inline DerivativeSeries correction_series(int truncation = kDefaultTruncation) {
  const DerivativeSeries unit = DerivativeSeries::term(0, QF(1), truncation);
  DerivativeSeries s = shift(unit, BigRational(1, 2)) + shift(unit, BigRational(-1, 2)) - QF(2) * unit;
  s *= QF(2);
  s.divide_by_h(2);
  s -= DerivativeSeries::term(2, QF(BigRational(1, 2)), truncation, -2);
  return s;
}

/// "u", "u_x", "u_xx", ...
inline std::string derivative_name(int order, bool with_t = false) {
  std::string s = "u";
  if (order > 0 || with_t) s += "_" + std::string(static_cast<std::size_t>(order), 'x');
  if (with_t) s += "t";
  return s;
}

/// Renders e.g. "u_xt = 0*u_xx + (-2/5)*h*u_xxx + O(h^2)". Terms of negative h power are
/// printed only when nonzero; terms are shown up to max_h_power.
inline std::string format_statement(const ModifiedPde& pde, int max_h_power = 1) {
  std::string out = derivative_name(pde.time_derivative, true) + " =";
  bool first = true;
  int next_power = pde.remainder_power;
  for (const auto& t : pde.terms) {
    if (t.h_power > max_h_power) {
      next_power = std::min(next_power, t.h_power);
      break;
    }
    if (t.h_power < 0 && t.coefficient.is_zero()) continue;
    std::string c = t.coefficient.str();
    if (c.find_first_of("/- +") != std::string::npos) c = "(" + c + ")";
    out += first ? " " : " + ";
    first = false;
    out += c + "*";
    if (t.h_power == 1) out += "h*";
    else if (t.h_power != 0) out += "h^" + std::to_string(t.h_power) + "*";
    out += derivative_name(t.derivative);
  }
  if (first) out += " 0";
  out += " + O(h^" + std::to_string(next_power) + ")";
  return out;
}

}  // namespace shadowdg::exact
