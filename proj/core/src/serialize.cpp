#include "mrlab/serialize.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace mrlab {

namespace {

template <typename U>
void put(std::ostream& out, U v) {
  char bytes[sizeof(U)];
  for (std::size_t i = 0; i < sizeof(U); ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes, sizeof(U));
}

void put_f64(std::ostream& out, double v) { put(out, std::bit_cast<std::uint64_t>(v)); }

template <typename U>
U get(std::istream& in) {
  unsigned char bytes[sizeof(U)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(U))) {
    throw std::runtime_error("unexpected end of binary stream");
  }
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(bytes[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get<std::uint64_t>(in)); }

void put_grid(std::ostream& out, const Grid& grid) {
  put(out, static_cast<std::uint32_t>(grid.dim()));
  for (int k = 0; k < grid.dim(); ++k) put(out, static_cast<std::uint64_t>(grid.size(k)));
  for (int k = 0; k < grid.dim(); ++k) put_f64(out, grid.extent(k));
}

Grid get_grid(std::istream& in) {
  const auto n = get<std::uint32_t>(in);
  if (n < 1 || n > static_cast<std::uint32_t>(kMaxDim)) throw std::runtime_error("bad grid dimension in stream");
  std::vector<std::size_t> sizes(n);
  std::vector<double> extents(n);
  for (auto& m : sizes) m = static_cast<std::size_t>(get<std::uint64_t>(in));
  for (auto& l : extents) l = get_f64(in);
  return Grid(std::move(extents), std::move(sizes));
}

}  // namespace

void write_grid_function(std::ostream& out, const GridFunction& u) {
  put_grid(out, u.grid());
  put(out, static_cast<std::uint64_t>(u.components()));
  put_f64(out, u.space().q);
  for (const Complex& z : u.values()) {
    put_f64(out, z.real());
    put_f64(out, z.imag());
  }
  if (!out) throw std::runtime_error("failed to write grid function");
}

GridFunction read_grid_function(std::istream& in) {
  Grid grid = get_grid(in);
  const auto n = static_cast<std::size_t>(get<std::uint64_t>(in));
  const double q = get_f64(in);
  ValueSpace space(n, q);
  std::vector<Complex> values(grid.point_count() * n);
  for (auto& z : values) {
    const double re = get_f64(in);
    const double im = get_f64(in);
    z = {re, im};
  }
  return GridFunction(std::move(grid), space, std::move(values));
}

void write_weight(std::ostream& out, const Weight& w) {
  put_grid(out, w.grid());
  for (double v : w.values()) {
    put_f64(out, v);
    put_f64(out, 0.0);
  }
  if (!out) throw std::runtime_error("failed to write weight");
}

Weight read_weight(std::istream& in) {
  Grid grid = get_grid(in);
  std::vector<double> values(grid.point_count());
  for (auto& v : values) {
    v = get_f64(in);
    get_f64(in);
  }
  return Weight::tabulated(grid, std::move(values));
}

void write_time_series(std::ostream& out, double horizon, std::span<const GridFunction> snapshots) {
  if (snapshots.empty()) throw std::invalid_argument("empty time series");
  put_f64(out, horizon);
  put(out, static_cast<std::uint64_t>(snapshots.size() - 1));
  for (const GridFunction& u : snapshots) write_grid_function(out, u);
}

std::vector<GridFunction> read_time_series(std::istream& in, double* horizon) {
  const double t = get_f64(in);
  const auto steps = get<std::uint64_t>(in);
  if (horizon) *horizon = t;
  std::vector<GridFunction> out;
  out.reserve(steps + 1);
  for (std::uint64_t i = 0; i <= steps; ++i) out.push_back(read_grid_function(in));
  return out;
}

void save_grid_function(const std::string& path, const GridFunction& u) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_grid_function(out, u);
}

GridFunction load_grid_function(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_grid_function(in);
}

}  // namespace mrlab
