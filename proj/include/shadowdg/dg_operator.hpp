#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "shadowdg/mesh_basis.hpp"
#include "shadowdg/update_matrices.hpp"

namespace shadowdg {

/// Interface value is the right trace of the upwind (left) cell.
struct Upwind {};

/// Interface value is a supplied function u(x, t) sampled at x_{j+1/2}. Only for
/// checking generic-flux statements; it injects exact-solution data.
struct ExactInterface {
  std::function<double(double x, double t)> u;

  static ExactInterface steady(std::function<double(double)> f) {
    return {[f = std::move(f)](double x, double) { return f(x); }};
  }
};

using FluxRule = std::variant<Upwind, ExactInterface>;

/// da/dt from the weak form, with each basis function used as test function:
///   dx M_m da_m/dt = int u_h phi_m' dxi - uhat_{j+1/2} phi_m(1/2) + uhat_{j-1/2} phi_m(-1/2).
/// The volume integral uses the 5-point Gauss rule (exact for these degrees).
inline ModalField rhs_weak(const ModalField& field, const FluxRule& flux, double t = 0.0) {
  const Mesh1D& mesh = field.mesh();
  const ModalBasis& basis = field.basis();
  const int n = mesh.cells();
  const double dx = mesh.dx();
  const auto& rule = gauss5();

  std::vector<double> face(static_cast<std::size_t>(n) + 1);  // face[j] = uhat at x_{j-1/2} of cell j
  if (const auto* exact = std::get_if<ExactInterface>(&flux)) {
    if (!exact->u) throw std::invalid_argument("rhs_weak: ExactInterface without a function");
    for (int j = 0; j <= n; ++j) face[static_cast<std::size_t>(j)] = exact->u(mesh.left_face(j), t);
  } else {
    for (int j = 0; j <= n; ++j) face[static_cast<std::size_t>(j)] = trace_right(field, mesh.wrap(j - 1));
  }

  ModalField out(mesh, field.degree());
  for (int j = 0; j < n; ++j) {
    const double left = face[static_cast<std::size_t>(j)];
    const double right = face[static_cast<std::size_t>(j) + 1];
    for (int m = 0; m < basis.size(); ++m) {
      double volume = 0.0;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q)
        volume += rule.weights[q] * field.at(j, rule.nodes[q]) * basis.derivative(m, rule.nodes[q]);
      const double boundary = right * basis.value(m, 0.5) - left * basis.value(m, -0.5);
      out(j, m) = (volume - boundary) / (dx * basis.mass(m));
    }
  }
  return out;
}

/// Cached floating copies of the exact update matrices, one per degree.
inline const UpdateMatrices& cached_update_matrices(int degree) {
  static const std::vector<UpdateMatrices> cache = [] {
    std::vector<UpdateMatrices> v;
    for (int k = 0; k <= 2; ++k) v.push_back(update_matrices(k));
    return v;
  }();
  if (degree < 0 || degree > 2) throw std::invalid_argument("rhs_matrix: unsupported degree " + std::to_string(degree));
  return cache[static_cast<std::size_t>(degree)];
}

/// da^j/dt = -(A a^j - B a^{j-1}) / dx, the closed-form upwind update.
inline ModalField rhs_matrix(const ModalField& field) {
  const UpdateMatrices& mats = cached_update_matrices(field.degree());
  const Mesh1D& mesh = field.mesh();
  const int k1 = field.modes();
  const double inv_dx = 1.0 / mesh.dx();
  ModalField out(mesh, field.degree());
  for (int j = 0; j < mesh.cells(); ++j) {
    const auto own = field.cell(j);
    const auto upwind = field.cell(mesh.wrap(j - 1));
    for (int m = 0; m < k1; ++m) {
      double s = 0.0;
      for (int n = 0; n < k1; ++n) {
        const auto idx = static_cast<std::size_t>(m * k1 + n);
        s += mats.A_double[idx] * own[static_cast<std::size_t>(n)] - mats.B_double[idx] * upwind[static_cast<std::size_t>(n)];
      }
      out(j, m) = -s * inv_dx;
    }
  }
  return out;
}

using ComplexMatrix = Eigen::MatrixXcd;

/// Fourier symbol per unit dx: G(theta) = -(A - B e^{-i theta}).
inline ComplexMatrix symbol(double theta, int degree) {
  const UpdateMatrices& mats = cached_update_matrices(degree);
  const int k1 = mats.size();
  const std::complex<double> shift = std::polar(1.0, -theta);
  ComplexMatrix g(k1, k1);
  for (int m = 0; m < k1; ++m)
    for (int n = 0; n < k1; ++n) {
      const auto idx = static_cast<std::size_t>(m * k1 + n);
      g(m, n) = -(mats.A_double[idx] - mats.B_double[idx] * shift);
    }
  return g;
}

/// Eigenvalues of G(theta), sorted by (real, imag) for reproducible output.
inline std::vector<std::complex<double>> symbol_eigenvalues(double theta, int degree) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(symbol(theta, degree), false);
  std::vector<std::complex<double>> ev(solver.eigenvalues().data(),
                                       solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return ev;
}

/// C = 2 (U(x+dx/2) + U(x-dx/2) - 2U(x)) / dx^2 - U''(x)/2 at a cell center.
inline double correction_term(const ScalarFunction& u, const ScalarFunction& u_xx, double x_j, double dx) {
  const double second = 2.0 * (u(x_j + 0.5 * dx) + u(x_j - 0.5 * dx) - 2.0 * u(x_j)) / (dx * dx);
  return second - 0.5 * u_xx(x_j);
}

}  // namespace shadowdg
