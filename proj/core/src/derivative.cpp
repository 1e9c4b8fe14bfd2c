#include "mrlab/derivative.hpp"

#include <stdexcept>

#include "mrlab/fourier.hpp"
#include "mrlab/parallel.hpp"

namespace mrlab {

namespace {

// i^k for k >= 0
Complex i_power(int k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

Complex derivative_symbol(const Grid& grid, const MultiIndex& alpha, std::size_t flat) {
  if (alpha.dim() != grid.dim()) throw std::invalid_argument("derivative order dimension mismatch");
  const auto idx = grid.unravel(flat);
  double magnitude = 1.0;
  for (int k = 0; k < grid.dim(); ++k) {
    const int a = alpha[k];
    if (a == 0) continue;
    const std::size_t j = idx[static_cast<std::size_t>(k)];
    if (a % 2 == 1 && grid.is_nyquist(k, j)) return 0.0;
    const double xi = grid.frequency(k, j);
    double pk = 1.0;
    for (int r = 0; r < a; ++r) pk *= xi;
    magnitude *= pk;
  }
  return i_power(alpha.total()) * magnitude;
}

void multiply_derivative_symbol(GridFunction& u_hat, const MultiIndex& alpha) {
  if (alpha.is_zero()) return;
  const Grid& grid = u_hat.grid();
  parallel_for(grid.point_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const Complex s = derivative_symbol(grid, alpha, p);
      for (Complex& z : u_hat.at(p)) z *= s;
    }
  });
}

GridFunction spectral_derivative(const GridFunction& u, const MultiIndex& alpha) {
  if (alpha.is_zero()) return u;
  GridFunction w = forward_transform(u);
  multiply_derivative_symbol(w, alpha);
  inverse_transform_inplace(w);
  return w;
}

}  // namespace mrlab
