#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace shadowdg {

/// Uniform periodic mesh of [0, 1] with N cells; cell j (0-based) is [j dx, (j+1) dx].
class Mesh1D {
 public:
  explicit Mesh1D(int cells) : n_(cells) {
    if (cells < 1) throw std::invalid_argument("Mesh1D: cell count must be positive, got " + std::to_string(cells));
  }

  int cells() const { return n_; }
  double dx() const { return 1.0 / n_; }
  double center(int j) const { return (j + 0.5) / n_; }
  double left_face(int j) const { return static_cast<double>(j) / n_; }
  double right_face(int j) const { return static_cast<double>(j + 1) / n_; }

  /// Periodic wrap of any integer index.
  int wrap(int j) const { return ((j % n_) + n_) % n_; }

  friend bool operator==(const Mesh1D&, const Mesh1D&) = default;

 private:
  int n_;
};

/// 5-point Gauss-Legendre rule mapped to xi in [-1/2, 1/2]; weights sum to 1.
struct GaussRule {
  std::array<double, 5> nodes;
  std::array<double, 5> weights;
};

inline const GaussRule& gauss5() {
  static const GaussRule rule = [] {
    const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
    const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
    GaussRule r{{-b / 2, -a / 2, 0.0, a / 2, b / 2}, {wb / 2, wa / 2, 128.0 / 450.0, wa / 2, wb / 2}};
    return r;
  }();
  return rule;
}

/// Modal basis in xi = (x - x_j)/dx:
///   k=0: {1};  k=1: {1, xi};  k=2: {1, 2 sqrt3 xi, 6 sqrt5 xi^2 - sqrt5/2}.
/// All three are orthogonal; the mass diagonal is (1), (1, 1/12), (1, 1, 1).
class ModalBasis {
 public:
  explicit ModalBasis(int degree) : degree_(degree) {
    if (degree < 0 || degree > 2)
      throw std::invalid_argument("ModalBasis: degree must be 0, 1 or 2, got " + std::to_string(degree));
  }

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }

  double value(int m, double xi) const {
    static const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
    switch (m) {
      case 0:
        return 1.0;
      case 1:
        return degree_ == 1 ? xi : 2.0 * s3 * xi;
      default:
        return 6.0 * s5 * xi * xi - s5 / 2.0;
    }
  }

  /// d phi_m / d xi.
  double derivative(int m, double xi) const {
    static const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
    switch (m) {
      case 0:
        return 0.0;
      case 1:
        return degree_ == 1 ? 1.0 : 2.0 * s3;
      default:
        return 12.0 * s5 * xi;
    }
  }

  double mass(int m) const { return (degree_ == 1 && m == 1) ? 1.0 / 12.0 : 1.0; }

 private:
  int degree_;
};

/// Per-cell modal coefficients, stored cell-major: values()[j*(k+1) + m] = a^j_m.
class ModalField {
 public:
  ModalField(Mesh1D mesh, int degree)
      : mesh_(mesh), basis_(degree), coeffs_(static_cast<std::size_t>(mesh.cells() * (degree + 1)), 0.0) {}

  const Mesh1D& mesh() const { return mesh_; }
  const ModalBasis& basis() const { return basis_; }
  int degree() const { return basis_.degree(); }
  int modes() const { return basis_.size(); }

  double& operator()(int j, int m) { return coeffs_[index(j, m)]; }
  double operator()(int j, int m) const { return coeffs_[index(j, m)]; }

  std::span<double> cell(int j) { return {coeffs_.data() + index(j, 0), static_cast<std::size_t>(modes())}; }
  std::span<const double> cell(int j) const {
    return {coeffs_.data() + index(j, 0), static_cast<std::size_t>(modes())};
  }

  std::span<double> values() { return coeffs_; }
  std::span<const double> values() const { return coeffs_; }

  /// Value of u_h in cell j at reference coordinate xi.
  double at(int j, double xi) const {
    double s = 0.0;
    for (int m = 0; m < modes(); ++m) s += (*this)(j, m) * basis_.value(m, xi);
    return s;
  }

 private:
  std::size_t index(int j, int m) const {
    if (j < 0 || j >= mesh_.cells() || m < 0 || m >= modes())
      throw std::out_of_range("ModalField: index (" + std::to_string(j) + ", " + std::to_string(m) + ") out of range");
    return static_cast<std::size_t>(j * modes() + m);
  }

  Mesh1D mesh_;
  ModalBasis basis_;
  std::vector<double> coeffs_;
};

using ScalarFunction = std::function<double(double)>;

/// Cell-wise L2 projection with the 5-point Gauss rule.
inline ModalField project(const ScalarFunction& f, const Mesh1D& mesh, int degree) {
  ModalField field(mesh, degree);
  const auto& rule = gauss5();
  const double dx = mesh.dx();
  for (int j = 0; j < mesh.cells(); ++j) {
    const double xc = mesh.center(j);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double v = f(xc + rule.nodes[q] * dx);
      if (!std::isfinite(v))
        throw std::domain_error("project: non-finite sample in cell " + std::to_string(j) + " at x = " +
                                std::to_string(xc + rule.nodes[q] * dx));
      for (int m = 0; m < field.modes(); ++m) field(j, m) += rule.weights[q] * v * field.basis().value(m, rule.nodes[q]);
    }
    for (int m = 0; m < field.modes(); ++m) field(j, m) /= field.basis().mass(m);
  }
  return field;
}

/// u_h at xi = +1/2 of cell j.
inline double trace_right(const ModalField& field, int j) { return field.at(j, 0.5); }
/// u_h at xi = -1/2 of cell j.
inline double trace_left(const ModalField& field, int j) { return field.at(j, -0.5); }

/// Point evaluation. An interface point belongs to the cell on its left; x = 0 is the
/// periodic image of x = 1 and so reads the right trace of the last cell.
inline double eval(const ModalField& field, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("eval: x = " + std::to_string(x) + " outside [0, 1]");
  const Mesh1D& mesh = field.mesh();
  const double s = x * mesh.cells();
  const double nearest = std::round(s);
  if (std::abs(s - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, s)) {
    const int face = static_cast<int>(nearest);
    return trace_right(field, mesh.wrap(face - 1));
  }
  const int j = std::clamp(static_cast<int>(std::ceil(s)) - 1, 0, mesh.cells() - 1);
  return field.at(j, (x - mesh.center(j)) / mesh.dx());
}

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Quadrature approximations of ||u_h - f||; the max norm is taken over the Gauss nodes.
inline ErrorNorms error_norms(const ModalField& field, const ScalarFunction& exact) {
  const auto& rule = gauss5();
  const Mesh1D& mesh = field.mesh();
  const double dx = mesh.dx();
  ErrorNorms e;
  double sq = 0.0;
  for (int j = 0; j < mesh.cells(); ++j) {
    const double xc = mesh.center(j);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double d = std::abs(field.at(j, rule.nodes[q]) - exact(xc + rule.nodes[q] * dx));
      e.l1 += rule.weights[q] * dx * d;
      sq += rule.weights[q] * dx * d * d;
      e.linf = std::max(e.linf, d);
    }
  }
  e.l2 = std::sqrt(sq);
  return e;
}

}  // namespace shadowdg
