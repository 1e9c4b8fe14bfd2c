#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mrlab/symbol.hpp"

namespace mrlab {

/// Cell A_{j,r}^k: the dyadic box prod [2^{j_k}, 2^{j_k+1}) split into 2^k
/// pieces per axis, r_k selecting the piece.
struct DyadicCell {
  std::vector<int> j;
  int level = 0;
  std::vector<std::int64_t> r;

  bool operator==(const DyadicCell&) const = default;
  bool operator<(const DyadicCell& other) const;
};

/// Cell containing a point with all coordinates strictly positive.
std::optional<DyadicCell> locate(std::span<const double> xi, int level);
/// Lower corner 2^{j_k} + r_k 2^{j_k - level}.
std::vector<double> anchor(const DyadicCell& cell);
bool cell_contains(const DyadicCell& cell, std::span<const double> xi);

struct DyadicPartition {
  std::vector<DyadicCell> cells;
  /// Index into cells for every flat lattice point, or npos off (0, inf)^n.
  std::vector<std::size_t> cell_of_point;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Cells of the given level that meet the strictly positive lattice frequencies.
DyadicPartition dyadic_partition(const Grid& grid, int level);

/// Symbol equal to M at the anchor of the cell containing xi. Coordinates are
/// reflected through |xi_k| with signs restored, so the approximation is
/// defined on all of R^n; zero coordinates stay zero.
OperatorSymbol piecewise_const_approx(const OperatorSymbol& m, int level);

}  // namespace mrlab
