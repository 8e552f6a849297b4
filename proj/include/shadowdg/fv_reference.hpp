#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shadowdg/mesh_basis.hpp"

namespace shadowdg {

/// Cell averages on a periodic mesh.
class AverageField {
 public:
  explicit AverageField(Mesh1D mesh) : mesh_(mesh), avg_(static_cast<std::size_t>(mesh.cells()), 0.0) {}
  AverageField(Mesh1D mesh, std::vector<double> averages) : mesh_(mesh), avg_(std::move(averages)) {
    if (avg_.size() != static_cast<std::size_t>(mesh.cells()))
      throw std::invalid_argument("AverageField: expected " + std::to_string(mesh.cells()) + " averages");
  }

  /// Exact (Gauss) cell averages of f.
  static AverageField from_function(const ScalarFunction& f, const Mesh1D& mesh) {
    const ModalField p = project(f, mesh, 0);
    return AverageField(mesh, {p.values().begin(), p.values().end()});
  }

  const Mesh1D& mesh() const { return mesh_; }
  double& operator[](int j) { return avg_[static_cast<std::size_t>(j)]; }
  double operator[](int j) const { return avg_[static_cast<std::size_t>(j)]; }
  std::span<double> values() { return avg_; }
  std::span<const double> values() const { return avg_; }

 private:
  Mesh1D mesh_;
  std::vector<double> avg_;
};

/// d ubar_j/dt = -(ubar_j - ubar_{j-1}) / dx.
inline AverageField rhs_fv1(const AverageField& field) {
  const Mesh1D& mesh = field.mesh();
  AverageField out(mesh);
  const double inv_dx = 1.0 / mesh.dx();
  for (int j = 0; j < mesh.cells(); ++j) out[j] = -(field[j] - field[mesh.wrap(j - 1)]) * inv_dx;
  return out;
}

enum class SlopeChoice {
  Central,       // (ubar_{j+1} - ubar_{j-1}) / 2
  UpwindBiased,  // ubar_j - ubar_{j-1}
  Zero,          // piecewise constant; reduces to fv1
};

inline SlopeChoice parse_slope(std::string_view name) {
  if (name == "central") return SlopeChoice::Central;
  if (name == "upwind") return SlopeChoice::UpwindBiased;
  if (name == "zero") return SlopeChoice::Zero;
  throw std::invalid_argument("unknown slope choice '" + std::string(name) + "'");
}

/// Unlimited linear reconstruction with upwind interface value u_{j+1/2} = ubar_j + slope_j/2.
inline AverageField rhs_fv2(const AverageField& field, SlopeChoice slope) {
  const Mesh1D& mesh = field.mesh();
  const int n = mesh.cells();
  std::vector<double> face(static_cast<std::size_t>(n));  // u at x_{j+1/2}
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    switch (slope) {
      case SlopeChoice::Central:
        s = 0.5 * (field[mesh.wrap(j + 1)] - field[mesh.wrap(j - 1)]);
        break;
      case SlopeChoice::UpwindBiased:
        s = field[j] - field[mesh.wrap(j - 1)];
        break;
      case SlopeChoice::Zero:
        break;
    }
    face[static_cast<std::size_t>(j)] = field[j] + 0.5 * s;
  }
  AverageField out(mesh);
  const double inv_dx = 1.0 / mesh.dx();
  for (int j = 0; j < n; ++j)
    out[j] = -(face[static_cast<std::size_t>(j)] - face[static_cast<std::size_t>(mesh.wrap(j - 1))]) * inv_dx;
  return out;
}

}  // namespace shadowdg
