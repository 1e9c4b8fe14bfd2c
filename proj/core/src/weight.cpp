#include "mrlab/weight.hpp"

#include <cmath>
#include <stdexcept>

namespace mrlab {

Weight::Weight(Kind kind, Grid grid, std::vector<double> exponents, std::vector<double> values)
    : kind_(kind), grid_(std::move(grid)), exponents_(std::move(exponents)), values_(std::move(values)) {}

Weight Weight::constant(const Grid& grid) {
  return Weight(Kind::constant_one, grid, {}, std::vector<double>(grid.point_count(), 1.0));
}

Weight Weight::power(const Grid& grid, std::vector<double> exponents) {
  if (exponents.size() != static_cast<std::size_t>(grid.dim())) {
    throw std::invalid_argument("power weight needs one exponent per axis");
  }
  std::vector<double> values(grid.point_count());
  std::array<double, kMaxDim> x{};
  for (std::size_t p = 0; p < grid.point_count(); ++p) {
    grid.point(p, std::span<double>(x.data(), static_cast<std::size_t>(grid.dim())));
    double w = 1.0;
    for (int k = 0; k < grid.dim(); ++k) {
      const double a = exponents[static_cast<std::size_t>(k)];
      if (a != 0.0) w *= std::pow(std::abs(x[static_cast<std::size_t>(k)] + 0.5 * grid.spacing(k)), a);
    }
    values[p] = w;
  }
  return Weight(Kind::axis_power, grid, std::move(exponents), std::move(values));
}

Weight Weight::tabulated(const Grid& grid, std::vector<double> values) {
  if (values.size() != grid.point_count()) {
    throw std::invalid_argument("tabulated weight size does not match the grid");
  }
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("weight values must be positive and finite");
    }
  }
  return Weight(Kind::tabulated, grid, {}, std::move(values));
}

Weight WeightSpec::on(const Grid& grid) const {
  if (exponents.empty()) return Weight::constant(grid);
  return Weight::power(grid, exponents);
}

}  // namespace mrlab
