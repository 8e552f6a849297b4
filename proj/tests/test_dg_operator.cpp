#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "shadowdg/dg_operator.hpp"

using namespace shadowdg;
using shadowdg::exact::QF;

namespace {

ModalField random_field(int cells, int degree, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1, 1);
  ModalField f(Mesh1D(cells), degree);
  for (auto& v : f.values()) v = u(gen);
  return f;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST(UpdateMatrices, FirstRowsAgree) {
  for (int k = 0; k <= 2; ++k) {
    const auto m = update_matrices(k);
    for (int n = 0; n <= k; ++n) EXPECT_EQ(m.A(0, n), m.B(0, n));
  }
  EXPECT_EQ(update_matrices(0).A(0, 0), QF(1));
  EXPECT_EQ(update_matrices(0).B(0, 0), QF(1));
}

TEST(RhsWeak, ConstantIsSteady) {
  for (int k = 0; k <= 2; ++k) {
    const auto f = project([](double) { return 1.7; }, Mesh1D(9), k);
    EXPECT_LE(max_abs(rhs_weak(f, Upwind{}).values()), 1e-13);
    EXPECT_LE(max_abs(rhs_matrix(f).values()), 1e-13);
  }
}

TEST(RhsWeak, TwoCellHandExample) {
  ModalField f(Mesh1D(2), 1);
  f(0, 0) = 1.0;
  // Oracle: da0 = -(1/dx)(trace_2 - trace_1) = -2 (0 - 1); da1 = -(6/dx)(a0_1 + a1_1/2) = -12.
  for (const auto& r : {rhs_weak(f, Upwind{}), rhs_matrix(f)}) {
    EXPECT_NEAR(r(1, 0), 2.0, 1e-14);
    EXPECT_NEAR(r(1, 1), -12.0, 1e-13);
  }
}

TEST(RhsWeak, ExactInterfaceLinearData) {
  ModalField f(Mesh1D(1), 1);
  f(0, 0) = 0.5;
  f(0, 1) = 1.0;
  const auto r = rhs_weak(f, ExactInterface::steady([](double x) { return x; }));
  EXPECT_NEAR(r(0, 1), 0.0, 1e-14);
  EXPECT_THROW(rhs_weak(f, ExactInterface{}), std::invalid_argument);
}

TEST(RhsMatrix, SingleModeColumn) {
  // Own-cell contribution is -A (0,0,1) / dx; on two cells the neighbour is empty.
  ModalField g(Mesh1D(2), 2);
  g(0, 2) = 1.0;
  const double dx = 0.5;
  const auto r = rhs_matrix(g);
  EXPECT_NEAR(r(0, 0) * dx, -std::sqrt(5.0), 1e-14);
  EXPECT_NEAR(r(0, 1) * dx, -std::sqrt(15.0), 1e-14);
  EXPECT_NEAR(r(0, 2) * dx, -5.0, 1e-14);
}

TEST(DgOperator, PathEquivalenceOnRandomFields) {
  std::mt19937_64 gen(42);
  for (int k = 0; k <= 2; ++k)
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = random_field(64, k, gen);
      const auto a = rhs_weak(f, Upwind{});
      const auto b = rhs_matrix(f);
      const double dx = f.mesh().dx();
      double dev = 0.0;
      for (std::size_t i = 0; i < a.values().size(); ++i) dev = std::max(dev, std::abs(a.values()[i] - b.values()[i]));
      ASSERT_LE(dev * dx, 1e-13 * max_abs(f.values())) << "k=" << k;
    }
}

TEST(DgOperator, ConservationOfMeanMode) {
  std::mt19937_64 gen(1);
  for (int k = 0; k <= 2; ++k)
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_field(64, k, gen);
      for (const auto& r : {rhs_weak(f, Upwind{}), rhs_matrix(f)}) {
        double s = 0.0;
        for (int j = 0; j < 64; ++j) s += r(j, 0);
        EXPECT_LE(std::abs(s) * f.mesh().dx(), 1e-13 * 64);
      }
    }
}

TEST(DgOperator, Linearity) {
  std::mt19937_64 gen(9);
  for (int k = 0; k <= 2; ++k) {
    const auto u = random_field(32, k, gen), v = random_field(32, k, gen);
    const double alpha = 0.3, beta = -1.7;
    ModalField w(u.mesh(), k);
    for (std::size_t i = 0; i < w.values().size(); ++i) w.values()[i] = alpha * u.values()[i] + beta * v.values()[i];
    const auto ru = rhs_matrix(u), rv = rhs_matrix(v), rw = rhs_matrix(w);
    const auto wu = rhs_weak(u, Upwind{}), wv = rhs_weak(v, Upwind{}), ww = rhs_weak(w, Upwind{});
    const double dx = u.mesh().dx();
    for (std::size_t i = 0; i < rw.values().size(); ++i) {
      EXPECT_NEAR(rw.values()[i] * dx, (alpha * ru.values()[i] + beta * rv.values()[i]) * dx, 1e-13);
      EXPECT_NEAR(ww.values()[i] * dx, (alpha * wu.values()[i] + beta * wv.values()[i]) * dx, 1e-13);
    }
  }
}

TEST(Symbol, ZeroWavenumber) {
  const auto g1 = symbol(0.0, 1);
  EXPECT_NEAR(std::abs(g1(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g1(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g1(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(g1(1, 1).real(), -6.0, 1e-14);
  const auto e1 = symbol_eigenvalues(0.0, 1);
  EXPECT_NEAR(std::abs(e1[0] - std::complex<double>(-6, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(e1[1]), 0.0, 1e-12);

  // Oracle: the lower 2x2 block of -(A - B) is [[-6, -2 sqrt15], [2 sqrt15, 0]]: lambda^2 + 6 lambda + 60 = 0.
  const auto e2 = symbol_eigenvalues(0.0, 2);
  const std::complex<double> root(-3.0, std::sqrt(51.0));
  EXPECT_NEAR(std::abs(e2[0] - std::conj(root)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(e2[1] - root), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(e2[2]), 0.0, 1e-10);
}

TEST(Symbol, FirstOrderUpwind) {
  for (double theta : {0.3, 1.0, std::numbers::pi, 5.0}) {
    const auto g = symbol(theta, 0);
    const auto expect = -(1.0 - std::polar(1.0, -theta));
    EXPECT_NEAR(std::abs(g(0, 0) - expect), 0.0, 1e-15);
    EXPECT_LE(g(0, 0).real(), 0.0);
  }
  EXPECT_NEAR(symbol(std::numbers::pi, 0)(0, 0).real(), -2.0, 1e-15);
}

TEST(Symbol, SpectrumIsDissipative) {
  for (int k = 0; k <= 2; ++k)
    for (int i = 0; i < 256; ++i) {
      const double theta = 2 * std::numbers::pi * i / 256;
      for (auto z : symbol_eigenvalues(theta, k)) EXPECT_LE(z.real(), 1e-12) << "k=" << k << " theta=" << theta;
    }
}

TEST(Symbol, EigenvaluesMatchCirculantOperator) {
  // For N cells the spectrum of the full operator is the union of eig(G(2 pi m / N)) / dx.
  const int n = 8, k = 1;
  const Mesh1D mesh(n);
  const int dim = n * (k + 1);
  Eigen::MatrixXd full(dim, dim);
  for (int c = 0; c < dim; ++c) {
    ModalField e(mesh, k);
    e.values()[static_cast<std::size_t>(c)] = 1.0;
    const auto r = rhs_matrix(e);
    for (int row = 0; row < dim; ++row) full(row, c) = r.values()[static_cast<std::size_t>(row)];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(full);
  for (int m = 0; m < n; ++m)
    for (auto z : symbol_eigenvalues(2 * std::numbers::pi * m / n, k)) {
      double best = 1e300;
      for (int i = 0; i < dim; ++i) best = std::min(best, std::abs(solver.eigenvalues()(i) - z / mesh.dx()));
      EXPECT_LT(best, 1e-8);
    }
}

TEST(CorrectionTerm, PolynomialsCancel) {
  const auto zero = [](double) { return 0.0; };
  EXPECT_NEAR(correction_term([](double x) { return 2 * x + 1; }, zero, 0.3, 0.1), 0.0, 1e-12);
  EXPECT_NEAR(correction_term([](double x) { return x * x / 2; }, [](double) { return 1.0; }, 0.3, 0.1), 0.0, 1e-12);
}

TEST(CorrectionTerm, SineScalesWithFourthDerivative) {
  const double w = 2 * std::numbers::pi, x = 0.2;
  const auto u = [w](double y) { return std::sin(w * y); };
  const auto uxx = [w](double y) { return -w * w * std::sin(w * y); };
  // Oracle: C = u'''' dx^2 / 96 + O(dx^4).
  const double target = std::pow(w, 4) * std::sin(w * x) / 96;
  double prev_err = 1e300;
  for (double dx : {0.04, 0.02, 0.01}) {
    const double err = std::abs(correction_term(u, uxx, x, dx) / (dx * dx) - target);
    EXPECT_LT(err, prev_err / 3.5);
    prev_err = err;
  }
  EXPECT_LT(prev_err / target, 1e-3);
}
