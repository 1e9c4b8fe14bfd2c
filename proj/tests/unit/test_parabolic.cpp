#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mrlab/embedding.hpp"
#include "mrlab/errors.hpp"
#include "mrlab/norms.hpp"
#include "mrlab/parabolic.hpp"
#include "mrlab/sector.hpp"
#include "oracles.hpp"

namespace mrlab {
namespace {

const double kPi = std::numbers::pi;

double relative_l2(const GridFunction& a, const GridFunction& b) {
  return lp_norm(a - b, 2.0) / lp_norm(b, 2.0);
}

TEST(Cauchy, ZeroForcing) {
  const Grid g({kPi}, {16});
  ParabolicProblem prob{PrincipalPart::laplacian(1), PositiveOperator::identity(2)};
  prob.steps = 8;
  const std::vector<GridFunction> f(9, GridFunction(g, ValueSpace(2, 2.0)));
  const auto sol = solve_cauchy(prob, f);
  for (const auto& u : sol.u) EXPECT_EQ(u.max_abs(), 0.0);
}

TEST(Cauchy, ConstantForcingSingleMode) {
  const Grid g({kPi}, {16});
  const auto a = PositiveOperator::diagonal({0.5, 3.0});
  ParabolicProblem prob{PrincipalPart::laplacian(1), a};
  prob.steps = 10;
  const Complex c(1.5, -0.5);
  const Forcing f = [&](double, std::span<const double> x, std::span<Complex> v) {
    v[0] = c * std::exp(Complex(0.0, 2.0 * x[0]));
    v[1] = 0.0;
  };
  const auto forcing = sample_forcing(g, a.space(), f, prob.horizon, prob.steps);
  const auto sol = solve_cauchy(prob, forcing);
  const double rate = 4.0 + 0.5;
  for (std::size_t i = 0; i <= prob.steps; ++i) {
    const double t = prob.dt() * static_cast<double>(i);
    const Complex expected = c * (1.0 - std::exp(-rate * t)) / rate;
    EXPECT_LT(std::abs(sol.u[i](0, 0) - expected * std::exp(Complex(0.0, -2.0 * kPi))), 1e-12);
    EXPECT_LT(std::abs(sol.du_dt[i](0, 0) - c * std::exp(-rate * t)), 1e-12);
  }
}

Forcing smooth_forcing(std::size_t n) {
  return [n](double t, std::span<const double> x, std::span<Complex> v) {
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = std::sin(kPi * t) * (std::cos(x[0] + static_cast<double>(i)) + 0.5 * std::sin(3.0 * x[0])) +
             t * Complex(0.0, 1.0) * std::cos(2.0 * x[0]) / (1.0 + static_cast<double>(i));
    }
  };
}

TEST(Cauchy, MatchesImplicitEulerRefinement) {
  const Grid g({kPi}, {16});
  const auto a = PositiveOperator::lq_diagonal(0.5, 2);
  ParabolicProblem prob{PrincipalPart::laplacian(1), a};
  prob.steps = 64;
  const Forcing f = smooth_forcing(2);
  const auto sol = solve_cauchy(prob, sample_forcing(g, a.space(), f, 1.0, prob.steps));
  std::vector<double> errors;
  for (std::size_t steps : {64u, 128u, 256u, 512u}) {
    errors.push_back(relative_l2(oracle::implicit_euler(prob, g, a.space(), f, steps), sol.u.back()));
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double order = std::log2(errors[i - 1] / errors[i]);
    EXPECT_GT(order, 0.9);
    EXPECT_LT(order, 1.1);
  }
}

TEST(Cauchy, NonParabolicRejected) {
  const Grid g({kPi}, {16});
  const PrincipalPart k(1, 1, {{MultiIndex({2}), -std::polar(1.0, 0.6 * kPi)}});
  ParabolicProblem prob{k, PositiveOperator::identity(1)};
  prob.steps = 2;
  const std::vector<GridFunction> f(3, GridFunction(g, ValueSpace(1, 2.0)));
  EXPECT_THROW(solve_cauchy(prob, f), ConditionViolation);
}

TEST(MaximalRegularity, SingleModeClosedForm) {
  const Grid g({kPi}, {16});
  const auto a = PositiveOperator::diagonal({2.0});
  ParabolicProblem prob{PrincipalPart::laplacian(1), a};
  prob.steps = 4096;
  const double k = 3.0;
  const Forcing f = [&](double, std::span<const double> x, std::span<Complex> v) { v[0] = std::exp(Complex(0.0, k * x[0])); };
  const std::vector<std::vector<GridFunction>> corpus{sample_forcing(g, a.space(), f, 1.0, prob.steps)};
  const auto r = maximal_regularity_report(prob, corpus);
  // Per mode with rate z = k^2 + d: u = (1 - e^{-zt})/z, u_t = e^{-zt}; the
  // norms over [0,1] are integrals of exponentials.
  const double z = k * k + 2.0;
  const double i0 = 1.0;
  const double i1 = (1.0 - std::exp(-z)) / z;
  const double i2 = (1.0 - std::exp(-2.0 * z)) / (2.0 * z);
  const double u2 = (i0 - 2.0 * i1 + i2) / (z * z);
  const double expected = (std::sqrt(i2) + (2.0 + k * k) * std::sqrt(u2)) / std::sqrt(i0);
  EXPECT_NEAR(r.max_ratio, expected, 1e-6);
}

TEST(MaximalRegularity, ScalingInvariantAndStable) {
  const Grid g({kPi}, {32});
  const auto a = PositiveOperator::lq_diagonal(1.0, 4);
  ParabolicProblem prob{PrincipalPart::laplacian(1), a};
  prob.steps = 64;
  const auto band = random_band_limited(g, 4, 2, 0);
  const auto u0 = band.sample(g, a.space());
  const Forcing f = [&](double t, std::span<const double> x, std::span<Complex> v) {
    const auto j = static_cast<std::size_t>(std::llround((x[0] + kPi) / g.spacing(0)));
    for (std::size_t i = 0; i < 4; ++i) v[i] = std::cos(3.0 * t) * u0(j, i);
  };
  const std::vector<std::vector<GridFunction>> c1{sample_forcing(g, a.space(), f, 1.0, 64)};
  const auto base = maximal_regularity_report(prob, c1);
  std::vector<GridFunction> scaled = c1[0];
  for (auto& s : scaled) s *= Complex(0.0, 7.0);
  const std::vector<std::vector<GridFunction>> c2{scaled};
  EXPECT_NEAR(maximal_regularity_report(prob, c2).max_ratio, base.max_ratio, 1e-12 * base.max_ratio);

  prob.steps = 128;
  const std::vector<std::vector<GridFunction>> c3{sample_forcing(g, a.space(), f, 1.0, 128)};
  const double fine = maximal_regularity_report(prob, c3).max_ratio;
  EXPECT_LT(std::max(fine, base.max_ratio) / std::min(fine, base.max_ratio), 1.5);
}

TEST(RPositivity, ScalarFamilyBoundedByOne) {
  const Grid g({kPi}, {16});
  ParabolicProblem prob{PrincipalPart::laplacian(1), PositiveOperator::identity(1)};
  std::vector<Complex> lambdas;
  for (double x : {0.01, 0.1, 1.0, 10.0, 100.0}) lambdas.emplace_back(x);
  const auto r = rpositivity_symbol_check(prob, g, lambdas);
  EXPECT_LE(r.estimate.bound, 1.0 + 1e-6);
  EXPECT_THROW(rpositivity_symbol_check(prob, g, std::span<const Complex>{}), std::invalid_argument);
}

TEST(RPositivity, SectorBoundaryStable) {
  const Grid g({kPi}, {16});
  ParabolicProblem prob{PrincipalPart::laplacian(1), PositiveOperator::lq_diagonal(1.0, 4)};
  auto lambdas = [](int count) {
    std::vector<Complex> l;
    for (double r : log_spaced(1e-2, 1e3, static_cast<std::size_t>(count))) l.push_back(std::polar(r, 0.75 * kPi));
    return l;
  };
  RBoundOptions opt;
  opt.vector_draws = 200;
  const double a = rpositivity_symbol_check(prob, g, lambdas(6), opt).estimate.bound;
  const double b = rpositivity_symbol_check(prob, g, lambdas(12), opt).estimate.bound;
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_NEAR(b / a, 1.0, 0.1);
}

}  // namespace
}  // namespace mrlab
