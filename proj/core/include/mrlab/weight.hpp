#pragma once

#include <span>
#include <vector>

#include "mrlab/grid.hpp"

namespace mrlab {

/// Positive weight sampled on a grid.
///
/// Power weights prod_k |x_k|^{a_k} are sampled on the grid shifted by half a
/// cell, so x = 0 is never evaluated while the blow-up near 0 is retained.
class Weight {
 public:
  enum class Kind { constant_one, axis_power, tabulated };

  static Weight constant(const Grid& grid);
  static Weight power(const Grid& grid, std::vector<double> exponents);
  static Weight tabulated(const Grid& grid, std::vector<double> values);

  Kind kind() const { return kind_; }
  const Grid& grid() const { return grid_; }
  const std::vector<double>& exponents() const { return exponents_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t point) const { return values_[point]; }
  bool is_constant_one() const { return kind_ == Kind::constant_one; }

 private:
  Weight(Kind kind, Grid grid, std::vector<double> exponents, std::vector<double> values);

  Kind kind_;
  Grid grid_;
  std::vector<double> exponents_;
  std::vector<double> values_;
};

/// Grid-independent description of a weight, re-sampled on each grid it meets.
/// Empty exponents mean the constant weight.
struct WeightSpec {
  std::vector<double> exponents;

  bool is_constant() const { return exponents.empty(); }
  Weight on(const Grid& grid) const;
};

}  // namespace mrlab
