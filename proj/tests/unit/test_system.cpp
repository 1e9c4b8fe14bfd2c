#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mrlab/errors.hpp"
#include "mrlab/system.hpp"
#include "oracles.hpp"

namespace mrlab {
namespace {

const double kPi = std::numbers::pi;

Eigen::MatrixXd coupling() {
  Eigen::MatrixXd m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  return m;
}

TEST(System, ScalarReducesToCauchy) {
  const Grid g({kPi}, {16});
  Eigen::MatrixXd one(1, 1);
  one << 1.0;
  ParabolicProblem prob{PrincipalPart::laplacian(1), PositiveOperator::symmetric(one)};
  prob.steps = 16;
  const Forcing f = [](double t, std::span<const double> x, std::span<Complex> v) { v[0] = t * std::cos(x[0]); };
  const auto forcing = sample_forcing(g, ValueSpace(1, 2.0), f, 1.0, 16);
  const auto a = solve_system(prob, forcing);
  prob.a = PositiveOperator::identity(1);
  const auto b = solve_cauchy(prob, forcing);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(std::abs(a.u.back()(i, 0) - b.u.back()(i, 0)), 0.0, 1e-14);
}

TEST(System, CoupledModeMatchesOdeOracle) {
  const Grid g({kPi}, {16});
  const auto a = PositiveOperator::symmetric(coupling());
  ParabolicProblem prob{PrincipalPart::laplacian(1), a};
  prob.steps = 1024;
  const double k = 2.0;
  Eigen::VectorXcd c0(2);
  c0 << 1.0, Complex(0.0, -2.0);
  Eigen::VectorXcd c1(2);
  c1 << -0.5, 1.0;
  auto g_of_t = [&](double t) { return Eigen::VectorXcd(std::sin(kPi * t) * c0 + t * c1); };
  const Forcing f = [&](double t, std::span<const double> x, std::span<Complex> v) {
    const Eigen::VectorXcd gt = g_of_t(t);
    const Complex e = std::exp(Complex(0.0, k * x[0]));
    v[0] = e * gt[0];
    v[1] = e * gt[1];
  };
  const auto sol = solve_system(prob, sample_forcing(g, a.space(), f, 1.0, prob.steps));
  const Eigen::MatrixXcd b = (coupling() + k * k * Eigen::MatrixXd::Identity(2, 2)).cast<Complex>();
  const Eigen::VectorXcd ref = oracle::rk4(b, g_of_t, 1.0, 20000);
  // Point x_0 = -pi carries phase e^{-2 pi i} = 1.
  Eigen::VectorXcd got(2);
  got << sol.u.back()(0, 0), sol.u.back()(0, 1);
  EXPECT_LT((got - ref).norm() / ref.norm(), 1e-6);
}

TEST(System, CouplingChecks) {
  EXPECT_NEAR(ellipticity_constant(coupling()), 1.0, 1e-14);
  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 2.0, 2.0, 1.0;
  EXPECT_NEAR(ellipticity_constant(bad), -1.0, 1e-14);
  EXPECT_THROW(PositiveOperator::symmetric(bad), ConditionViolation);
}

TEST(System, ReportCarriesC0) {
  const Grid g({kPi}, {16});
  ParabolicProblem prob{PrincipalPart::laplacian(1), PositiveOperator::symmetric(coupling())};
  prob.steps = 32;
  const Forcing f = [](double t, std::span<const double> x, std::span<Complex> v) {
    v[0] = std::cos(t) * std::sin(x[0]);
    v[1] = 1.0;
  };
  const std::vector<std::vector<GridFunction>> corpus{sample_forcing(g, ValueSpace(2, 2.0), f, 1.0, 32)};
  const auto r = system_report(prob, corpus);
  EXPECT_NEAR(r.c0, 1.0, 1e-14);
  EXPECT_EQ(r.mixed.rows.size(), 1u);
  EXPECT_TRUE(std::isfinite(r.spatial.max_ratio));
}

}  // namespace
}  // namespace mrlab
