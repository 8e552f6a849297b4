#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "shadowdg/exact/big_rational.hpp"

namespace shadowdg::exact {

/// Exact element a + b*sqrt(3) + c*sqrt(5) + d*sqrt(15) of Q[sqrt3, sqrt5].
///
/// Components are canonical rationals, so equality is component-wise. Division
/// is only supported by monomials (a single nonzero component), which covers
/// every normalization the modal bases need.
class QF {
 public:
  enum Component : int { kOne = 0, kSqrt3 = 1, kSqrt5 = 2, kSqrt15 = 3 };

  QF() = default;
  QF(const BigRational& a) : c_{a, 0, 0, 0} {}  // NOLINT: implicit from rational is intended
  QF(long long a) : c_{BigRational(a), 0, 0, 0} {}  // NOLINT
  QF(BigRational a, BigRational b, BigRational c, BigRational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static QF sqrt3() { return {0, 1, 0, 0}; }
  static QF sqrt5() { return {0, 0, 1, 0}; }
  static QF sqrt15() { return {0, 0, 0, 1}; }

  const BigRational& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  const BigRational& rational_part() const { return c_[0]; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  /// True when at most one component is nonzero (q * sqrt(r)).
  bool is_monomial() const {
    int nonzero = 0;
    for (const auto& x : c_) nonzero += (x != 0);
    return nonzero <= 1;
  }

  double to_double() const {
    static const double kRoots[4] = {1.0, std::sqrt(3.0), std::sqrt(5.0), std::sqrt(15.0)};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += exact::to_double(c_[i]) * kRoots[i];
    return s;
  }

  QF operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

  QF& operator+=(const QF& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  QF& operator-=(const QF& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }

  // sqrt3*sqrt5 = sqrt15, sqrt3*sqrt15 = 3 sqrt5, sqrt5*sqrt15 = 5 sqrt3.
  friend QF operator*(const QF& x, const QF& y) {
    const auto& [a1, b1, c1, d1] = x.c_;
    const auto& [a2, b2, c2, d2] = y.c_;
    return {a1 * a2 + 3 * b1 * b2 + 5 * c1 * c2 + 15 * d1 * d2,
            a1 * b2 + b1 * a2 + 5 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 3 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2};
  }
  QF& operator*=(const QF& o) { return *this = *this * o; }

  QF& operator/=(const BigRational& q) {
    if (q == 0) throw std::domain_error("QF: division by zero");
    for (auto& x : c_) x /= q;
    return *this;
  }

  /// Inverse of a nonzero monomial: (q sqrt r)^-1 = sqrt r / (q r).
  QF monomial_inverse() const {
    if (is_zero()) throw std::domain_error("QF: inverse of zero");
    if (!is_monomial()) throw std::domain_error("QF: inverse only defined for monomials, got " + str());
    static const int kRadicand[4] = {1, 3, 5, 15};
    QF r;
    for (int i = 0; i < 4; ++i)
      if (c_[i] != 0) r.c_[i] = 1 / (c_[i] * kRadicand[i]);
    return r;
  }

  friend QF operator+(QF x, const QF& y) { return x += y; }
  friend QF operator-(QF x, const QF& y) { return x -= y; }
  friend QF operator/(QF x, const BigRational& q) { return x /= q; }
  friend QF operator/(const QF& x, const QF& y) {
    if (y.is_rational()) return x / y.rational_part();
    return x * y.monomial_inverse();
  }
  friend bool operator==(const QF& x, const QF& y) { return x.c_ == y.c_; }

  /// Human form, e.g. "1/2 + 3*sqrt3 - 1/5*sqrt15". Zero prints as "0".
  std::string str() const {
    static const char* kNames[4] = {"", "sqrt3", "sqrt5", "sqrt15"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (c_[i] == 0) continue;
      BigRational mag = c_[i] < 0 ? BigRational(-c_[i]) : c_[i];
      if (out.empty()) {
        if (c_[i] < 0) out += "-";
      } else {
        out += c_[i] < 0 ? " - " : " + ";
      }
      if (i == 0) {
        out += to_string(mag);
      } else {
        if (mag != 1) out += to_string(mag) + "*";
        out += kNames[i];
      }
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const QF& q) { return os << q.str(); }

 private:
  std::array<BigRational, 4> c_{};
};

}  // namespace shadowdg::exact
