#include "mrlab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mrlab {

MultiIndex::MultiIndex(std::vector<int> o) : orders(std::move(o)) {
  for (int a : orders) {
    if (a < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  }
}

int MultiIndex::total() const {
  int s = 0;
  for (int a : orders) s += a;
  return s;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multi-index dimension mismatch");
  std::vector<int> o(a.orders);
  for (std::size_t k = 0; k < o.size(); ++k) o[k] += b.orders[k];
  return MultiIndex(std::move(o));
}

namespace {

void enumerate(int n, int axis, int remaining, std::vector<int>& cur,
               std::vector<MultiIndex>& out) {
  if (axis == n - 1) {
    cur[static_cast<std::size_t>(axis)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[static_cast<std::size_t>(axis)] = a;
    enumerate(n, axis + 1, remaining - a, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_order(int n, int order) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  enumerate(n, 0, order, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(int n, int order) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= order; ++k) {
    auto level = multi_indices_of_order(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Anisotropy::Anisotropy(std::vector<int> orders) : l(std::move(orders)) {
  if (l.empty()) throw std::invalid_argument("anisotropy needs at least one axis");
  for (int v : l) {
    if (v < 1) throw std::invalid_argument("anisotropy orders must be >= 1");
  }
}

double Anisotropy::kappa(const MultiIndex& alpha) const {
  if (alpha.dim() != dim()) throw std::invalid_argument("multi-index/anisotropy dimension mismatch");
  double s = 0.0;
  for (int k = 0; k < dim(); ++k) s += static_cast<double>(alpha[k]) / l[static_cast<std::size_t>(k)];
  return s;
}

MultiIndex Anisotropy::pure(int axis) const {
  std::vector<int> o(l.size(), 0);
  o[static_cast<std::size_t>(axis)] = l[static_cast<std::size_t>(axis)];
  return MultiIndex(std::move(o));
}

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

Grid::Grid(std::vector<double> extents, std::vector<std::size_t> sizes)
    : extents_(std::move(extents)), sizes_(std::move(sizes)) {
  if (sizes_.empty() || sizes_.size() > static_cast<std::size_t>(kMaxDim)) {
    throw std::invalid_argument("grid dimension must be between 1 and 3");
  }
  if (extents_.size() != sizes_.size()) {
    throw std::invalid_argument("grid extents and sizes differ in length");
  }
  count_ = 1;
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    if (sizes_[k] < 4 || !is_power_of_two(sizes_[k])) {
      throw std::invalid_argument("grid size on axis " + std::to_string(k) +
                                  " must be a power of two >= 4");
    }
    if (!(extents_[k] > 0.0) || !std::isfinite(extents_[k])) {
      throw std::invalid_argument("grid extent on axis " + std::to_string(k) + " must be positive");
    }
    count_ *= sizes_[k];
  }
}

Grid Grid::uniform(int n, std::size_t points_per_axis, double half_width) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("grid dimension must be between 1 and 3");
  return Grid(std::vector<double>(static_cast<std::size_t>(n), half_width),
              std::vector<std::size_t>(static_cast<std::size_t>(n), points_per_axis));
}

double Grid::spacing(int axis) const { return 2.0 * extent(axis) / static_cast<double>(size(axis)); }

double Grid::cell_volume() const {
  double v = 1.0;
  for (int k = 0; k < dim(); ++k) v *= spacing(k);
  return v;
}

double Grid::coordinate(int axis, std::size_t j) const {
  return -extent(axis) + static_cast<double>(j) * spacing(axis);
}

std::int64_t Grid::wavenumber(int axis, std::size_t j) const {
  const auto m = static_cast<std::int64_t>(size(axis));
  const auto s = static_cast<std::int64_t>(j);
  return s < m / 2 ? s : s - m;
}

double Grid::frequency(int axis, std::size_t j) const {
  return std::numbers::pi * static_cast<double>(wavenumber(axis, j)) / extent(axis);
}

bool Grid::is_nyquist(int axis, std::size_t j) const { return j == size(axis) / 2; }

std::array<std::size_t, kMaxDim> Grid::unravel(std::size_t flat) const {
  std::array<std::size_t, kMaxDim> idx{};
  for (int k = dim() - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = flat % size(k);
    flat /= size(k);
  }
  return idx;
}

std::size_t Grid::ravel(std::span<const std::size_t> index) const {
  std::size_t flat = 0;
  for (int k = 0; k < dim(); ++k) flat = flat * size(k) + index[static_cast<std::size_t>(k)];
  return flat;
}

void Grid::point(std::size_t flat, std::span<double> out) const {
  const auto idx = unravel(flat);
  for (int k = 0; k < dim(); ++k) out[static_cast<std::size_t>(k)] = coordinate(k, idx[static_cast<std::size_t>(k)]);
}

void Grid::frequency_of(std::size_t flat, std::span<double> out) const {
  const auto idx = unravel(flat);
  for (int k = 0; k < dim(); ++k) out[static_cast<std::size_t>(k)] = frequency(k, idx[static_cast<std::size_t>(k)]);
}

unsigned Grid::nyquist_mask(std::size_t flat) const {
  const auto idx = unravel(flat);
  unsigned mask = 0;
  for (int k = 0; k < dim(); ++k) {
    if (is_nyquist(k, idx[static_cast<std::size_t>(k)])) mask |= 1u << k;
  }
  return mask;
}

bool Grid::operator==(const Grid& other) const {
  return sizes_ == other.sizes_ && extents_ == other.extents_;
}

ValueSpace::ValueSpace(std::size_t n, double exponent) : dim(n), q(exponent) {
  if (n < 1) throw std::invalid_argument("value space dimension must be >= 1");
  if (!(exponent > 1.0) || !std::isfinite(exponent)) {
    throw std::invalid_argument("value space exponent q must lie in (1, inf)");
  }
}

}  // namespace mrlab
