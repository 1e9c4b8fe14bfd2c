#include "mrlab/ap_weight.hpp"

#include <cmath>
#include <stdexcept>

namespace mrlab {

int dyadic_generation_count(const Grid& grid) {
  std::size_t m = grid.size(0);
  for (int k = 1; k < grid.dim(); ++k) m = std::min(m, grid.size(k));
  int log2m = 0;
  while ((std::size_t{1} << (log2m + 1)) <= m) ++log2m;
  return log2m - 1;
}

std::vector<IndexCube> dyadic_cubes(const Grid& grid, int generation) {
  if (generation < 0 || generation >= dyadic_generation_count(grid)) {
    throw std::invalid_argument("dyadic generation out of range");
  }
  const int n = grid.dim();
  const std::size_t per_axis = std::size_t{1} << generation;
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= per_axis;

  std::vector<IndexCube> cubes;
  cubes.reserve(total);
  for (std::size_t c = 0; c < total; ++c) {
    IndexCube cube;
    std::size_t rest = c;
    for (int k = n - 1; k >= 0; --k) {
      const std::size_t side = grid.size(k) / per_axis;
      cube.start.insert(cube.start.begin(), (rest % per_axis) * side);
      cube.cells.insert(cube.cells.begin(), side);
      rest /= per_axis;
    }
    cubes.push_back(std::move(cube));
  }
  return cubes;
}

std::vector<IndexCube> default_cube_family(const Grid& grid) {
  std::vector<IndexCube> all;
  for (int g = 0; g < dyadic_generation_count(grid); ++g) {
    auto level = dyadic_cubes(grid, g);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

double ap_cube_value(const Weight& gamma, double p, const IndexCube& cube) {
  if (!(p > 1.0)) throw std::invalid_argument("A_p requires p > 1");
  const Grid& grid = gamma.grid();
  const int n = grid.dim();
  if (cube.start.size() != static_cast<std::size_t>(n) || cube.cells.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("cube dimension does not match the grid");
  }
  std::size_t count = 1;
  for (int k = 0; k < n; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    if (cube.start[ks] + cube.cells[ks] > grid.size(k)) {
      throw std::invalid_argument("cube leaves the grid domain");
    }
    count *= cube.cells[ks];
  }
  if (count < (std::size_t{1} << n)) {
    throw std::invalid_argument("cube must contain at least 2^n grid points");
  }

  const double dual = -1.0 / (p - 1.0);
  double sum_w = 0.0;
  double sum_dual = 0.0;
  std::array<std::size_t, kMaxDim> idx{};
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t rest = c;
    for (int k = n - 1; k >= 0; --k) {
      const auto ks = static_cast<std::size_t>(k);
      idx[ks] = cube.start[ks] + rest % cube.cells[ks];
      rest /= cube.cells[ks];
    }
    const double w = gamma[grid.ravel(std::span<const std::size_t>(idx.data(), static_cast<std::size_t>(n)))];
    sum_w += w;
    sum_dual += std::pow(w, dual);
  }
  const double avg_w = sum_w / static_cast<double>(count);
  const double avg_dual = sum_dual / static_cast<double>(count);
  return avg_w * std::pow(avg_dual, p - 1.0);
}

double ap_constant(const Weight& gamma, double p, const std::vector<IndexCube>& cubes) {
  if (cubes.empty()) throw std::invalid_argument("empty cube family");
  double best = 0.0;
  for (const IndexCube& cube : cubes) best = std::max(best, ap_cube_value(gamma, p, cube));
  return best;
}

std::vector<ApGenerationValue> ap_profile(const Weight& gamma, double p) {
  std::vector<ApGenerationValue> out;
  const Grid& grid = gamma.grid();
  for (int g = 0; g < dyadic_generation_count(grid); ++g) {
    const auto cubes = dyadic_cubes(grid, g);
    out.push_back({g, 2.0 * grid.extent(0) / static_cast<double>(std::size_t{1} << g), cubes.size(),
                   ap_constant(gamma, p, cubes)});
  }
  return out;
}

std::vector<ApRefinementStep> ap_refinement_ladder(
    const std::function<Weight(const Grid&)>& make_weight, const Grid& coarsest, double p,
    int levels) {
  std::vector<ApRefinementStep> out;
  std::vector<std::size_t> sizes = coarsest.sizes();
  for (int level = 0; level < levels; ++level) {
    const Grid grid(coarsest.extents(), sizes);
    const Weight w = make_weight(grid);
    out.push_back({grid.point_count(), ap_constant(w, p, default_cube_family(grid))});
    for (auto& m : sizes) m *= 2;
  }
  return out;
}

ApVerdict classify_ladder(const std::vector<ApRefinementStep>& ladder, double stable_tol,
                          double growth_tol) {
  if (ladder.size() < 2) return ApVerdict::inconclusive;
  bool growing = true;
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    if (!(ladder[i].constant > ladder[i - 1].constant * (1.0 + growth_tol))) growing = false;
  }
  if (growing) return ApVerdict::growing;
  const double last = ladder.back().constant;
  const double prev = ladder[ladder.size() - 2].constant;
  if (std::abs(last - prev) <= stable_tol * prev) return ApVerdict::stable;
  return ApVerdict::inconclusive;
}

}  // namespace mrlab
