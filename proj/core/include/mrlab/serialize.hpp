#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mrlab/grid_function.hpp"
#include "mrlab/weight.hpp"

namespace mrlab {

// Little-endian binary layout.
//   header: u32 n, u64 m_k (n times), f64 L_k (n times), u64 N, f64 q
//   body:   (re, im) f64 pairs, point-major with components innermost
// Weights use the same layout without N and q; imaginary parts are zero.
// Time series: f64 T, u64 steps, then steps + 1 grid-function records.

void write_grid_function(std::ostream& out, const GridFunction& u);
GridFunction read_grid_function(std::istream& in);

void write_weight(std::ostream& out, const Weight& w);
Weight read_weight(std::istream& in);

void write_time_series(std::ostream& out, double horizon, std::span<const GridFunction> snapshots);
std::vector<GridFunction> read_time_series(std::istream& in, double* horizon = nullptr);

void save_grid_function(const std::string& path, const GridFunction& u);
GridFunction load_grid_function(const std::string& path);

}  // namespace mrlab
