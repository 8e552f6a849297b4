#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowdg/exact/polynomial.hpp"
#include "shadowdg/exact/qf.hpp"

namespace shadowdg {

/// Dense square matrix with exact entries.
class QFMatrix {
 public:
  QFMatrix() = default;
  explicit QFMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n)) {}
  QFMatrix(int n, std::vector<exact::QF> row_major) : n_(n), data_(std::move(row_major)) {
    if (data_.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("QFMatrix: size mismatch");
  }

  int size() const { return n_; }
  exact::QF& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
  const exact::QF& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }

  std::vector<double> to_double() const {
    std::vector<double> out;
    out.reserve(data_.size());
    for (const auto& q : data_) out.push_back(q.to_double());
    return out;
  }

  friend bool operator==(const QFMatrix&, const QFMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<exact::QF> data_;
};

/// The pair (A, B) with  dx * da^j/dt + A a^j - B a^{j-1} = 0  for upwind flux at speed +1.
///
/// Entries are derived exactly from the modal basis:
///   A_mn = (phi_m(1/2) phi_n(1/2) - int phi_n phi_m') / M_m
///   B_mn =  phi_m(-1/2) phi_n(1/2) / M_m
/// with M_m the diagonal mass entry. Floating copies are rounded once, here.
struct UpdateMatrices {
  int degree = 0;
  QFMatrix A;
  QFMatrix B;
  std::vector<double> A_double;  // row-major
  std::vector<double> B_double;

  int size() const { return degree + 1; }
};

inline UpdateMatrices update_matrices(int degree) {
  using exact::BigRational;
  using exact::QF;
  const auto basis = exact::exact_basis(degree);
  const int n = degree + 1;
  const BigRational half(1, 2);

  UpdateMatrices m;
  m.degree = degree;
  m.A = QFMatrix(n);
  m.B = QFMatrix(n);
  for (int i = 0; i < n; ++i) {
    const QF mass = exact::integrate(basis[i] * basis[i]);
    if (!mass.is_rational()) throw std::logic_error("update_matrices: irrational mass entry");
    const auto dphi = basis[i].derivative();
    for (int j = 0; j < n; ++j) {
      const QF right = basis[i].at(half) * basis[j].at(half);
      const QF volume = exact::integrate(basis[j] * dphi);
      m.A(i, j) = (right - volume) / mass.rational_part();
      m.B(i, j) = basis[i].at(-half) * basis[j].at(half) / mass.rational_part();
    }
  }
  m.A_double = m.A.to_double();
  m.B_double = m.B.to_double();
  return m;
}

}  // namespace shadowdg
