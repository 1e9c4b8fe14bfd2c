#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "mrlab/embedding.hpp"
#include "mrlab/fourier.hpp"
#include "mrlab/multiplier.hpp"
#include "mrlab/parabolic.hpp"
#include "mrlab/rbound.hpp"
#include "mrlab/symbol.hpp"

namespace mrlab {
namespace {

const double kPi = std::numbers::pi;

Grid square_grid(std::size_t m, int n) { return Grid(std::vector<double>(static_cast<std::size_t>(n), kPi), std::vector<std::size_t>(static_cast<std::size_t>(n), m)); }

void BM_ForwardTransform(benchmark::State& state) {
  const Grid g = square_grid(static_cast<std::size_t>(state.range(0)), 2);
  const auto u = random_band_limited(g, 4, 1, 0).sample(g, ValueSpace(4, 2.0));
  for (auto _ : state) benchmark::DoNotOptimize(forward_transform(u));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.point_count() * 4));
}
BENCHMARK(BM_ForwardTransform)->Arg(64)->Arg(128)->Arg(256);

void BM_ApplyResolvent(benchmark::State& state) {
  const Grid g = square_grid(64, 2);
  const auto a = PositiveOperator::lq_diagonal(1.0, static_cast<std::size_t>(state.range(0)));
  const auto u = random_band_limited(g, a.dim(), 1, 0).sample(g, a.space());
  const OperatorSymbol m = symbols::resolvent(a, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(apply_symbol(m, u));
}
BENCHMARK(BM_ApplyResolvent)->Arg(4)->Arg(16);

void BM_SolveCauchy(benchmark::State& state) {
  const Grid g = square_grid(32, 2);
  const auto a = PositiveOperator::lq_diagonal(1.0, 4);
  ParabolicProblem prob{PrincipalPart::laplacian(2), a};
  prob.steps = static_cast<std::size_t>(state.range(0));
  const Forcing f = [](double t, std::span<const double> x, std::span<Complex> v) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::sin(kPi * t) * std::cos(x[0] + static_cast<double>(i) * x[1]);
  };
  const auto forcing = sample_forcing(g, a.space(), f, prob.horizon, prob.steps);
  for (auto _ : state) benchmark::DoNotOptimize(solve_cauchy(prob, forcing));
}
BENCHMARK(BM_SolveCauchy)->Arg(64)->Arg(256);

void BM_RBoundEstimate(benchmark::State& state) {
  std::vector<Eigen::MatrixXcd> family;
  for (int j = 0; j < state.range(0); ++j) {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 4; ++i) t(i, i) = 1.0 / (1.0 + i + j);
    t(0, 3) = Complex(0.0, 0.1 * j);
    family.push_back(t);
  }
  RBoundOptions opts;
  opts.vector_draws = 200;
  for (auto _ : state) benchmark::DoNotOptimize(r_bound_estimate(family, 2.0, opts));
}
BENCHMARK(BM_RBoundEstimate)->Arg(8)->Arg(64);

}  // namespace
}  // namespace mrlab

BENCHMARK_MAIN();
