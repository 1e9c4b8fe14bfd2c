#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "mrlab/grid.hpp"

namespace mrlab {

using Complex = std::complex<double>;

/// A function on a periodic grid with values in a truncated l_q space.
/// Storage is point-major: values()[point * N + component].
class GridFunction {
 public:
  using Sampler = std::function<void(std::span<const double> x, std::span<Complex> out)>;

  GridFunction(Grid grid, ValueSpace space);
  GridFunction(Grid grid, ValueSpace space, std::vector<Complex> values);

  static GridFunction sample(const Grid& grid, const ValueSpace& space, const Sampler& f);

  const Grid& grid() const { return grid_; }
  const ValueSpace& space() const { return space_; }
  std::size_t components() const { return space_.dim; }
  std::size_t point_count() const { return grid_.point_count(); }

  std::span<Complex> values() { return values_; }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> at(std::size_t point) {
    return {values_.data() + point * space_.dim, space_.dim};
  }
  std::span<const Complex> at(std::size_t point) const {
    return {values_.data() + point * space_.dim, space_.dim};
  }
  Complex& operator()(std::size_t point, std::size_t component) {
    return values_[point * space_.dim + component];
  }
  Complex operator()(std::size_t point, std::size_t component) const {
    return values_[point * space_.dim + component];
  }

  bool all_finite() const;
  bool same_shape(const GridFunction& other) const;

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(Complex c);
  /// this += c * other
  GridFunction& axpy(Complex c, const GridFunction& other);

  /// Largest entry modulus.
  double max_abs() const;

 private:
  Grid grid_;
  ValueSpace space_;
  std::vector<Complex> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(Complex c, GridFunction a);

/// Throws std::invalid_argument when shapes differ.
void require_same_shape(const GridFunction& a, const GridFunction& b, const char* where);

}  // namespace mrlab
