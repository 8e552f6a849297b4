#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "shadowdg/exact/qf.hpp"

namespace shadowdg::exact {

/// Polynomial in the reference coordinate xi in [-1/2, 1/2] with exact coefficients.
/// coeffs[p] multiplies xi^p.
struct XiPolynomial {
  std::vector<QF> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  QF at(const BigRational& xi) const {
    QF s;
    BigRational power = 1;
    for (const auto& c : coeffs) {
      s += c * QF(power);
      power *= xi;
    }
    return s;
  }

  XiPolynomial derivative() const {
    XiPolynomial d;
    for (std::size_t p = 1; p < coeffs.size(); ++p) d.coeffs.push_back(coeffs[p] * QF(static_cast<long long>(p)));
    return d;
  }

  friend XiPolynomial operator*(const XiPolynomial& x, const XiPolynomial& y) {
    XiPolynomial r;
    if (x.coeffs.empty() || y.coeffs.empty()) return r;
    r.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, QF{});
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
      for (std::size_t j = 0; j < y.coeffs.size(); ++j) r.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
    return r;
  }
};

/// Exact integral of xi^p over [-1/2, 1/2]: 0 for odd p, 1/((p+1) 2^p) for even p.
inline BigRational monomial_integral(std::size_t p) {
  if (p % 2 == 1) return 0;
  return BigRational(BigInt(1), BigInt(p + 1) * (BigInt(1) << p));
}

inline QF integrate(const XiPolynomial& poly) {
  QF s;
  for (std::size_t p = 0; p < poly.coeffs.size(); ++p) s += poly.coeffs[p] * QF(monomial_integral(p));
  return s;
}

/// The modal bases in exact form: k=0 {1}; k=1 {1, xi}; k=2 {1, 2 sqrt3 xi, 6 sqrt5 xi^2 - sqrt5/2}.
inline std::vector<XiPolynomial> exact_basis(int degree) {
  switch (degree) {
    case 0:
      return {XiPolynomial{{QF(1)}}};
    case 1:
      return {XiPolynomial{{QF(1)}}, XiPolynomial{{QF(0), QF(1)}}};
    case 2:
      return {XiPolynomial{{QF(1)}},
              XiPolynomial{{QF(0), QF(2) * QF::sqrt3()}},
              XiPolynomial{{-(QF::sqrt5() / BigRational(2)), QF(0), QF(6) * QF::sqrt5()}}};
    default:
      throw std::invalid_argument("exact_basis: unsupported degree " + std::to_string(degree));
  }
}

}  // namespace shadowdg::exact
