#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowdg/exact/qf.hpp"

namespace shadowdg::exact {

inline constexpr int kDefaultTruncation = 8;

/// Truncated formal sum  sum_{p=0..P} c_p * u^(p)(x) * h^(p + h_offset).
///
/// Derivative order and h-power are tied by a single integer offset; dividing
/// by h only moves the offset. Coefficients above the truncation order P are
/// unknown, and asking for them throws instead of returning zero.
class DerivativeSeries {
 public:
  explicit DerivativeSeries(int truncation = kDefaultTruncation, int h_offset = 0)
      : coeffs_(check_truncation(truncation) + 1), h_offset_(h_offset) {}

  /// The series u^(p) h^(p + offset) with coefficient one.
  static DerivativeSeries term(int p, const QF& c, int truncation = kDefaultTruncation, int h_offset = 0) {
    DerivativeSeries s(truncation, h_offset);
    s.set(p, c);
    return s;
  }

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  int h_offset() const { return h_offset_; }
  int h_power(int p) const { return p + h_offset_; }

  const QF& operator[](int p) const {
    if (p < 0 || p > truncation())
      throw std::out_of_range("DerivativeSeries: order " + std::to_string(p) + " exceeds truncation " +
                              std::to_string(truncation()));
    return coeffs_[static_cast<std::size_t>(p)];
  }

  void set(int p, QF c) {
    (void)(*this)[p];
    coeffs_[static_cast<std::size_t>(p)] = std::move(c);
  }

  /// Divide by h^n (negative n multiplies).
  DerivativeSeries& divide_by_h(int n = 1) {
    h_offset_ -= n;
    return *this;
  }

  DerivativeSeries& operator*=(const QF& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  DerivativeSeries& operator+=(const DerivativeSeries& o) { return accumulate(o, QF(1)); }
  DerivativeSeries& operator-=(const DerivativeSeries& o) { return accumulate(o, QF(-1)); }

  friend DerivativeSeries operator+(DerivativeSeries a, const DerivativeSeries& b) { return a += b; }
  friend DerivativeSeries operator-(DerivativeSeries a, const DerivativeSeries& b) { return a -= b; }
  friend DerivativeSeries operator*(const QF& s, DerivativeSeries a) { return a *= s; }
  friend DerivativeSeries operator*(DerivativeSeries a, const QF& s) { return a *= s; }

  friend bool operator==(const DerivativeSeries& a, const DerivativeSeries& b) {
    return a.h_offset_ == b.h_offset_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static int check_truncation(int truncation) {
    if (truncation < 0) throw std::invalid_argument("DerivativeSeries: negative truncation order");
    return truncation;
  }

  // The sum is only known through the smaller truncation order.
  DerivativeSeries& accumulate(const DerivativeSeries& o, const QF& sign) {
    if (o.h_offset_ != h_offset_)
      throw std::invalid_argument("DerivativeSeries: mismatched h offsets " + std::to_string(h_offset_) + " vs " +
                                  std::to_string(o.h_offset_));
    coeffs_.resize(static_cast<std::size_t>(std::min(truncation(), o.truncation())) + 1);
    for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += sign * o.coeffs_[p];
    return *this;
  }

  std::vector<QF> coeffs_;
  int h_offset_ = 0;
};

/// Re-expand every u^(p)(x + offset*h) as a Taylor series at x:
///   u^(p)(x + s h) = sum_q u^(p+q)(x) (s h)^q / q!.
/// Orders above the truncation are dropped, so the result stays exact through P.
inline DerivativeSeries shift(const DerivativeSeries& series, const BigRational& offset) {
  const BigRational mag = offset < 0 ? BigRational(-offset) : offset;
  if (mag != 0 && mag != 1 && mag != BigRational(1, 2))
    throw std::invalid_argument("shift: offset must be 0, +-1/2 or +-1 (got " + to_string(offset) + ")");
  const int P = series.truncation();
  if (P < 1 && offset != 0) throw std::out_of_range("shift: truncation order exhausted (P < 1)");
  DerivativeSeries out(P, series.h_offset());
  for (int p = 0; p <= P; ++p) {
    if (series[p].is_zero()) continue;
    for (int q = 0; p + q <= P; ++q) {
      const BigRational w = pow(offset, static_cast<unsigned>(q)) / factorial(static_cast<unsigned>(q));
      if (w == 0) continue;
      out.set(p + q, out[p + q] + series[p] * QF(w));
    }
  }
  return out;
}

}  // namespace shadowdg::exact
