#include "mrlab/dyadic.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace mrlab {

bool DyadicCell::operator<(const DyadicCell& other) const {
  return std::tie(level, j, r) < std::tie(other.level, other.j, other.r);
}

std::optional<DyadicCell> locate(std::span<const double> xi, int level) {
  if (level < 0) throw std::invalid_argument("dyadic level must be >= 0");
  DyadicCell cell;
  cell.level = level;
  for (double x : xi) {
    if (!(x > 0.0) || !std::isfinite(x)) return std::nullopt;
    int e = 0;
    const double f = std::frexp(x, &e);
    const int j = e - 1;
    const auto pieces = std::int64_t{1} << level;
    auto r = static_cast<std::int64_t>(std::floor((2.0 * f - 1.0) * static_cast<double>(pieces)));
    r = std::clamp<std::int64_t>(r, 0, pieces - 1);
    cell.j.push_back(j);
    cell.r.push_back(r);
  }
  return cell;
}

std::vector<double> anchor(const DyadicCell& cell) {
  std::vector<double> out;
  for (std::size_t k = 0; k < cell.j.size(); ++k) {
    out.push_back(std::ldexp(1.0, cell.j[k]) +
                  static_cast<double>(cell.r[k]) * std::ldexp(1.0, cell.j[k] - cell.level));
  }
  return out;
}

bool cell_contains(const DyadicCell& cell, std::span<const double> xi) {
  if (xi.size() != cell.j.size()) return false;
  const auto corner = anchor(cell);
  for (std::size_t k = 0; k < xi.size(); ++k) {
    const double width = std::ldexp(1.0, cell.j[k] - cell.level);
    if (!(xi[k] >= corner[k] && xi[k] < corner[k] + width)) return false;
  }
  return true;
}

DyadicPartition dyadic_partition(const Grid& grid, int level) {
  DyadicPartition out;
  out.cell_of_point.assign(grid.point_count(), DyadicPartition::npos);
  std::map<DyadicCell, std::vector<std::size_t>> members;
  std::array<double, kMaxDim> xi{};
  const std::span<double> xs(xi.data(), static_cast<std::size_t>(grid.dim()));
  for (std::size_t p = 0; p < grid.point_count(); ++p) {
    grid.frequency_of(p, xs);
    if (auto cell = locate(xs, level)) members[*cell].push_back(p);
  }
  for (auto& [cell, points] : members) {
    for (std::size_t p : points) out.cell_of_point[p] = out.cells.size();
    out.cells.push_back(cell);
  }
  return out;
}

namespace {

// sign(xi_k) * anchor_k(|xi|), zero coordinates kept at zero.
std::vector<double> reflected_anchor(std::span<const double> xi, int level) {
  std::vector<double> out(xi.size(), 0.0);
  for (std::size_t k = 0; k < xi.size(); ++k) {
    const double a = std::abs(xi[k]);
    if (a == 0.0) continue;
    const double one[1] = {a};
    const auto cell = locate(one, level);
    out[k] = std::copysign(anchor(*cell)[0], xi[k]);
  }
  return out;
}

}  // namespace

OperatorSymbol piecewise_const_approx(const OperatorSymbol& m, int level) {
  if (level < 0) throw std::invalid_argument("dyadic level must be >= 0");
  const std::string name = m.name() + "@dyadic" + std::to_string(level);
  switch (m.kind()) {
    case OperatorSymbol::Kind::scalar:
      return OperatorSymbol::scalar(
          [m, level](const FrequencyPoint& p) {
            const auto eta = reflected_anchor(p.xi, level);
            return m.evaluate_scalar(FrequencyPoint{eta, p.nyquist});
          },
          name);
    case OperatorSymbol::Kind::spectral:
      return OperatorSymbol::spectral(
          *m.op(),
          [m, level](const FrequencyPoint& p, double mu) {
            const auto eta = reflected_anchor(p.xi, level);
            return m.evaluate_spectral(FrequencyPoint{eta, p.nyquist}, mu);
          },
          name);
    case OperatorSymbol::Kind::dense:
      break;
  }
  return OperatorSymbol::dense(
      m.dim(),
      [m, level](const FrequencyPoint& p) {
        const auto eta = reflected_anchor(p.xi, level);
        return m.evaluate(FrequencyPoint{eta, p.nyquist}, m.dim());
      },
      name);
}

}  // namespace mrlab
