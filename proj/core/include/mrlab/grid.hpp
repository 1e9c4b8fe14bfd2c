#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mrlab {

inline constexpr int kMaxDim = 3;

/// Multi-index of non-negative derivative orders, one per axis.
struct MultiIndex {
  std::vector<int> orders;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> o);
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int dim() const { return static_cast<int>(orders.size()); }
  int total() const;
  int operator[](int k) const { return orders[static_cast<std::size_t>(k)]; }
  bool is_zero() const { return total() == 0; }
  bool operator==(const MultiIndex&) const = default;
};

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices in n variables with |alpha| == order.
std::vector<MultiIndex> multi_indices_of_order(int n, int order);
/// All multi-indices in n variables with |alpha| <= order.
std::vector<MultiIndex> multi_indices_up_to(int n, int order);

/// Anisotropic smoothness orders l = (l_1..l_n); kappa(alpha) = sum alpha_k / l_k.
struct Anisotropy {
  std::vector<int> l;

  Anisotropy() = default;
  explicit Anisotropy(std::vector<int> orders);
  int dim() const { return static_cast<int>(l.size()); }
  double kappa(const MultiIndex& alpha) const;
  /// The pure derivative l_k e_k.
  MultiIndex pure(int axis) const;
};

/// Torus [-L_1, L_1) x ... x [-L_n, L_n) sampled with m_k points per axis.
/// Flat point index is row-major (the last axis varies fastest).
class Grid {
 public:
  Grid(std::vector<double> extents, std::vector<std::size_t> sizes);
  static Grid uniform(int n, std::size_t points_per_axis, double half_width);

  int dim() const { return static_cast<int>(sizes_.size()); }
  std::size_t size(int axis) const { return sizes_[static_cast<std::size_t>(axis)]; }
  double extent(int axis) const { return extents_[static_cast<std::size_t>(axis)]; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  const std::vector<double>& extents() const { return extents_; }
  std::size_t point_count() const { return count_; }

  double spacing(int axis) const;
  double cell_volume() const;
  double coordinate(int axis, std::size_t j) const;
  /// Signed DFT index in [-m/2, m/2).
  std::int64_t wavenumber(int axis, std::size_t j) const;
  /// Lattice frequency pi * k / L.
  double frequency(int axis, std::size_t j) const;
  bool is_nyquist(int axis, std::size_t j) const;

  std::array<std::size_t, kMaxDim> unravel(std::size_t flat) const;
  std::size_t ravel(std::span<const std::size_t> index) const;

  /// Coordinates of a flat point; `out` must hold dim() entries.
  void point(std::size_t flat, std::span<double> out) const;
  /// Lattice frequency of a flat index; `out` must hold dim() entries.
  void frequency_of(std::size_t flat, std::span<double> out) const;
  /// Bit k is set when axis k sits on the Nyquist index.
  unsigned nyquist_mask(std::size_t flat) const;

  bool operator==(const Grid& other) const;

 private:
  std::vector<double> extents_;
  std::vector<std::size_t> sizes_;
  std::size_t count_ = 0;
};

bool is_power_of_two(std::size_t m);

/// Truncated sequence space l_q of dimension N.
struct ValueSpace {
  std::size_t dim = 1;
  double q = 2.0;

  ValueSpace() = default;
  ValueSpace(std::size_t n, double exponent);
  bool operator==(const ValueSpace&) const = default;
};

}  // namespace mrlab
