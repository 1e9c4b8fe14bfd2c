#include "mrlab/multiplier.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "mrlab/fourier.hpp"
#include "mrlab/operator_norm.hpp"
#include "mrlab/parallel.hpp"

namespace mrlab {

void apply_symbol_spectral(const OperatorSymbol& m, GridFunction& u_hat) {
  if (m.dim() != 0 && m.dim() != u_hat.components()) {
    throw std::invalid_argument("symbol dimension does not match the value space");
  }
  const Grid& grid = u_hat.grid();
  parallel_for(grid.point_count(), [&](std::size_t begin, std::size_t end) {
    std::array<double, kMaxDim> xi{};
    const std::span<double> xs(xi.data(), static_cast<std::size_t>(grid.dim()));
    for (std::size_t p = begin; p < end; ++p) {
      grid.frequency_of(p, xs);
      m.apply_at(FrequencyPoint{xs, grid.nyquist_mask(p)}, u_hat.at(p));
    }
  });
}

GridFunction apply_symbol(const OperatorSymbol& m, const GridFunction& u) {
  GridFunction w = forward_transform(u);
  apply_symbol_spectral(m, w);
  inverse_transform_inplace(w);
  return w;
}

double lattice_sup_norm(const OperatorSymbol& m, const Grid& grid, const ValueSpace& space) {
  const bool eigen_norm = m.kind() == OperatorSymbol::Kind::spectral &&
                          (m.op()->is_diagonal() || space.q == 2.0);
  return parallel_max(grid.point_count(), [&](std::size_t p) {
    std::array<double, kMaxDim> xi{};
    const std::span<double> xs(xi.data(), static_cast<std::size_t>(grid.dim()));
    grid.frequency_of(p, xs);
    const FrequencyPoint fp{xs, grid.nyquist_mask(p)};
    if (m.kind() == OperatorSymbol::Kind::scalar) return std::abs(m.evaluate_scalar(fp));
    if (eigen_norm) {
      double best = 0.0;
      for (Eigen::Index i = 0; i < m.op()->spectrum().size(); ++i) {
        best = std::max(best, std::abs(m.evaluate_spectral(fp, m.op()->spectrum()[i])));
      }
      return best;
    }
    return operator_norm(m.evaluate(fp, space.dim), space.q);
  });
}

namespace {

template <typename Keep>
GridFunction mask_projection(const GridFunction& u, Keep keep) {
  GridFunction w = forward_transform(u);
  const Grid& grid = w.grid();
  std::array<double, kMaxDim> xi{};
  const std::span<double> xs(xi.data(), static_cast<std::size_t>(grid.dim()));
  for (std::size_t p = 0; p < grid.point_count(); ++p) {
    grid.frequency_of(p, xs);
    if (!keep(p, xs)) {
      for (Complex& z : w.at(p)) z = 0.0;
    }
  }
  inverse_transform_inplace(w);
  return w;
}

void require_box_dim(const Grid& grid, std::size_t size) {
  if (size != static_cast<std::size_t>(grid.dim())) throw std::invalid_argument("box corner dimension mismatch");
}

}  // namespace

GridFunction half_line_projection(const GridFunction& u, int axis) {
  const Grid& grid = u.grid();
  if (axis < 0 || axis >= grid.dim()) throw std::invalid_argument("projection axis out of range");
  return mask_projection(u, [&](std::size_t p, std::span<const double>) {
    const auto idx = grid.unravel(p);
    return grid.wavenumber(axis, idx[static_cast<std::size_t>(axis)]) > 0;
  });
}

GridFunction riesz_projection(const GridFunction& u) {
  GridFunction w = forward_transform(u);
  const Grid& grid = w.grid();
  for (int axis = 0; axis < grid.dim(); ++axis) {
    for (std::size_t p = 0; p < grid.point_count(); ++p) {
      const auto idx = grid.unravel(p);
      if (grid.wavenumber(axis, idx[static_cast<std::size_t>(axis)]) <= 0) {
        for (Complex& z : w.at(p)) z = 0.0;
      }
    }
  }
  inverse_transform_inplace(w);
  return w;
}

GridFunction char_projection(std::span<const double> a, std::span<const double> b, const GridFunction& u) {
  require_box_dim(u.grid(), a.size());
  require_box_dim(u.grid(), b.size());
  return mask_projection(u, [&](std::size_t, std::span<const double> xi) {
    for (std::size_t k = 0; k < xi.size(); ++k) {
      if (!(xi[k] > a[k] && xi[k] < b[k])) return false;
    }
    return true;
  });
}

GridFunction lower_cut_projection(std::span<const double> a, const GridFunction& u) {
  require_box_dim(u.grid(), a.size());
  return mask_projection(u, [&](std::size_t, std::span<const double> xi) {
    for (std::size_t k = 0; k < xi.size(); ++k) {
      if (!(xi[k] > a[k])) return false;
    }
    return true;
  });
}

GridFunction upper_cut_projection(std::span<const double> b, const GridFunction& u) {
  require_box_dim(u.grid(), b.size());
  return mask_projection(u, [&](std::size_t, std::span<const double> xi) {
    for (std::size_t k = 0; k < xi.size(); ++k) {
      if (!(xi[k] < b[k])) return false;
    }
    return true;
  });
}

}  // namespace mrlab
