#include "mrlab/grid_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mrlab {

GridFunction::GridFunction(Grid grid, ValueSpace space)
    : grid_(std::move(grid)), space_(space), values_(grid_.point_count() * space_.dim) {}

GridFunction::GridFunction(Grid grid, ValueSpace space, std::vector<Complex> values)
    : grid_(std::move(grid)), space_(space), values_(std::move(values)) {
  if (values_.size() != grid_.point_count() * space_.dim) {
    throw std::invalid_argument("grid function expects " +
                                std::to_string(grid_.point_count() * space_.dim) +
                                " values, got " + std::to_string(values_.size()));
  }
}

GridFunction GridFunction::sample(const Grid& grid, const ValueSpace& space, const Sampler& f) {
  GridFunction u(grid, space);
  std::array<double, kMaxDim> x{};
  const std::span<double> xs(x.data(), static_cast<std::size_t>(grid.dim()));
  for (std::size_t p = 0; p < grid.point_count(); ++p) {
    grid.point(p, xs);
    f(xs, u.at(p));
  }
  return u;
}

bool GridFunction::all_finite() const {
  for (const Complex& z : values_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool GridFunction::same_shape(const GridFunction& other) const {
  return grid_ == other.grid_ && space_.dim == other.space_.dim;
}

void require_same_shape(const GridFunction& a, const GridFunction& b, const char* where) {
  if (!a.same_shape(b)) throw std::invalid_argument(std::string(where) + ": shape mismatch");
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(Complex c) {
  for (Complex& z : values_) z *= c;
  return *this;
}

GridFunction& GridFunction::axpy(Complex c, const GridFunction& other) {
  require_same_shape(*this, other, "axpy");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += c * other.values_[i];
  return *this;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const Complex& z : values_) m = std::max(m, std::abs(z));
  return m;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(Complex c, GridFunction a) { return a *= c; }

}  // namespace mrlab
