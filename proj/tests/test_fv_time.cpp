#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shadowdg/dg_operator.hpp"
#include "shadowdg/fv_reference.hpp"
#include "shadowdg/time_integrator.hpp"

using namespace shadowdg;

namespace {

double sine(double x) { return std::sin(2.0 * std::numbers::pi * x); }

struct Scalar {
  std::vector<double> v{1.0};
  std::span<double> values() { return v; }
  std::span<const double> values() const { return v; }
};

double total_variation(const AverageField& f) {
  double tv = 0.0;
  for (int j = 0; j < f.mesh().cells(); ++j) tv += std::abs(f[j] - f[f.mesh().wrap(j - 1)]);
  return tv;
}

}  // namespace

TEST(FvReference, ConstantIsSteady) {
  const AverageField c(Mesh1D(5), std::vector<double>(5, 2.0));
  const auto r1 = rhs_fv1(c);
  for (double v : r1.values()) EXPECT_EQ(v, 0.0);
  for (auto s : {SlopeChoice::Central, SlopeChoice::UpwindBiased}) {
    const auto r2 = rhs_fv2(c, s);
    for (double v : r2.values()) EXPECT_EQ(v, 0.0);
  }
}

TEST(FvReference, TwoCellUpwindStencil) {
  const AverageField f(Mesh1D(2), {1.0, 0.0});
  const auto r = rhs_fv1(f);
  EXPECT_DOUBLE_EQ(r[0], -2.0);
  EXPECT_DOUBLE_EQ(r[1], 2.0);
}

TEST(FvReference, ZeroSlopeEqualsFirstOrder) {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(-1, 1);
  AverageField f(Mesh1D(17));
  for (auto& v : f.values()) v = u(gen);
  const auto a = rhs_fv1(f), b = rhs_fv2(f, SlopeChoice::Zero);
  for (int j = 0; j < 17; ++j) EXPECT_EQ(a[j], b[j]);
}

TEST(FvReference, LinearReconstructionExactOnLinearData) {
  // Periodic hat: linear with slope 1 on the interior cells; cells away from the kinks
  // see the exact derivative -u_x = -1.
  const Mesh1D mesh(20);
  const auto hat = [](double x) { return x < 0.5 ? x : 1.0 - x; };
  const auto f = AverageField::from_function(hat, mesh);
  for (auto s : {SlopeChoice::Central, SlopeChoice::UpwindBiased}) {
    const auto r = rhs_fv2(f, s);
    for (int j = 3; j <= 7; ++j) EXPECT_NEAR(r[j], -1.0, 1e-12);
    for (int j = 13; j <= 17; ++j) EXPECT_NEAR(r[j], 1.0, 1e-12);
  }
}

TEST(FvReference, Conservation) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(-1, 1);
  AverageField f(Mesh1D(33));
  for (auto& v : f.values()) v = u(gen);
  for (const auto& r : {rhs_fv1(f), rhs_fv2(f, SlopeChoice::Central), rhs_fv2(f, SlopeChoice::UpwindBiased)}) {
    double s = 0.0;
    for (double v : r.values()) s += v;
    EXPECT_LE(std::abs(s) * f.mesh().dx(), 1e-13);
  }
}

TEST(FvReference, ParseSlope) {
  EXPECT_EQ(parse_slope("central"), SlopeChoice::Central);
  EXPECT_EQ(parse_slope("upwind"), SlopeChoice::UpwindBiased);
  EXPECT_THROW(parse_slope("minmod"), std::invalid_argument);
}

TEST(FvReference, TotalVariationDecaysUnderEuler) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(-1, 1);
  AverageField f(Mesh1D(50));
  for (auto& v : f.values()) v = u(gen);
  for (double cfl : {0.3, 0.8, 1.0}) {
    AverageField g = f;
    double tv = total_variation(g);
    for (int n = 0; n < 40; ++n) {
      g = step(g, [](const AverageField& s) { return rhs_fv1(s); }, cfl * g.mesh().dx(), Method::Euler);
      const double next = total_variation(g);
      ASSERT_LE(next, tv + 1e-12);
      tv = next;
    }
  }
}

TEST(TimeIntegrator, ZeroRhsLeavesStateUnchanged) {
  Scalar y;
  for (auto m : {Method::Euler, Method::SSPRK2, Method::SSPRK3}) {
    const auto r = step(y, [](const Scalar&) { return Scalar{{0.0}}; }, 0.1, m);
    EXPECT_EQ(r.v[0], 1.0);
  }
}

TEST(TimeIntegrator, StabilityPolynomials) {
  const double lambda = -1.3, dt = 0.2, z = lambda * dt;
  const auto f = [lambda](const Scalar& s) { return Scalar{{lambda * s.v[0]}}; };
  Scalar y;
  EXPECT_NEAR(step(y, f, dt, Method::Euler).v[0], 1 + z, 1e-15);
  EXPECT_NEAR(step(y, f, dt, Method::SSPRK2).v[0], 1 + z + z * z / 2, 1e-15);
  EXPECT_NEAR(step(y, f, dt, Method::SSPRK3).v[0], 1 + z + z * z / 2 + z * z * z / 6, 1e-15);
  EXPECT_THROW(step(y, f, 0.0, Method::Euler), std::invalid_argument);
}

TEST(TimeIntegrator, TemporalOrders) {
  const double lambda = -1.0;
  const auto f = [lambda](const Scalar& s) { return Scalar{{lambda * s.v[0]}}; };
  const double exact = std::exp(lambda);
  const std::pair<Method, double> cases[] = {{Method::Euler, 1.0}, {Method::SSPRK2, 2.0}, {Method::SSPRK3, 3.0}};
  for (auto [m, order] : cases) {
    const auto err = [&](double dt) {
      return std::abs(integrate(Scalar{}, f, Integrator{m, dt, 1.0}, 1.0).state.v[0] - exact);
    };
    EXPECT_NEAR(std::log2(err(0.01) / err(0.005)), order, 0.1) << to_string(m);
  }
}

TEST(TimeIntegrator, LandsExactlyOnFinalTime) {
  const auto one = [](const Scalar&) { return Scalar{{1.0}}; };
  Scalar y{{0.0}};
  const auto r = integrate(y, one, Integrator{Method::Euler, 0.3, 1.0}, 1.0);
  EXPECT_EQ(r.steps, 4);
  EXPECT_NEAR(r.state.v[0], 1.0, 1e-15);
  const auto zero = integrate(y, one, Integrator{Method::SSPRK3, 0.3, 0.0}, 1.0);
  EXPECT_EQ(zero.steps, 0);
  EXPECT_EQ(zero.state.v[0], 0.0);
  // An exact multiple must not add a sliver step.
  EXPECT_EQ(integrate(y, one, Integrator{Method::Euler, 0.1, 1.0}, 0.1).steps, 100);
}

TEST(TimeIntegrator, NonFiniteStateAborts) {
  const auto blow = [](const Scalar& s) { return Scalar{{s.v[0] * 1e300}}; };
  try {
    integrate(Scalar{}, blow, Integrator{Method::Euler, 1.0, 10.0}, 1.0);
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError& e) {
    EXPECT_EQ(e.step(), 2);
  }
}

TEST(TimeIntegrator, ConstantFieldPreserved) {
  const auto c = project([](double) { return 0.4; }, Mesh1D(16), 2);
  for (auto m : {Method::Euler, Method::SSPRK2, Method::SSPRK3}) {
    const auto r = integrate(c, [](const ModalField& f) { return rhs_matrix(f); }, Integrator{m, 0.1, 1.0}, 1.0 / 16);
    for (int j = 0; j < 16; ++j) {
      EXPECT_NEAR(r.state(j, 0), 0.4, 1e-13);
      EXPECT_NEAR(r.state(j, 2), 0.0, 1e-13);
    }
  }
}

TEST(TimeIntegrator, MeanConservedOverOnePeriod) {
  for (auto m : {Method::Euler, Method::SSPRK2, Method::SSPRK3})
    for (int k : {1, 2}) {
      const Mesh1D mesh(32);
      const auto u0 = project([](double x) { return std::exp(std::sin(2 * std::numbers::pi * x)); }, mesh, k);
      const auto r = integrate(u0, [](const ModalField& f) { return rhs_matrix(f); }, Integrator{m, 0.1, 1.0},
                               mesh.dx());
      double before = 0.0, after = 0.0;
      for (int j = 0; j < 32; ++j) {
        before += u0(j, 0) * mesh.dx();
        after += r.state(j, 0) * mesh.dx();
      }
      EXPECT_LE(std::abs(after - before), 1e-12);
    }
}

TEST(TimeIntegrator, FirstOrderUpwindVisiblyDiffuses) {
  const Mesh1D mesh(32);
  const auto r = integrate(project(sine, mesh, 0), [](const ModalField& f) { return rhs_matrix(f); },
                           Integrator{Method::Euler, 1.0, 1.0}, mesh.dx());
  EXPECT_EQ(r.steps, 32);
  // Euler at cfl 1 is the exact shift for k=0; SSPRK3 at cfl 1 is not and diffuses.
  const auto d = integrate(project(sine, mesh, 0), [](const ModalField& f) { return rhs_matrix(f); },
                           Integrator{Method::SSPRK3, 1.0, 1.0}, mesh.dx());
  EXPECT_GT(error_norms(d.state, sine).l2, 0.05);
}

TEST(TimeIntegrator, CflCeilingForP1) {
  const Mesh1D mesh(40);
  const auto u0 = project(sine, mesh, 1);
  const auto l2 = [](const ModalField& f) { return error_norms(f, [](double) { return 0.0; }).l2; };
  const auto rhs = [](const ModalField& f) { return rhs_matrix(f); };
  const auto stable = integrate(u0, rhs, Integrator{Method::SSPRK2, 0.15, 10.0}, mesh.dx());
  EXPECT_LE(l2(stable.state), l2(u0) * (1 + 1e-12));
  double grown = 0.0;
  try {
    grown = l2(integrate(u0, rhs, Integrator{Method::SSPRK2, 1.0, 10.0}, mesh.dx()).state);
  } catch (const IntegrationError&) {
    grown = INFINITY;
  }
  EXPECT_GT(grown, 10.0 * l2(u0));
}
