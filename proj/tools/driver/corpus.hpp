#pragma once

#include <cstdint>
#include <vector>

#include "mrlab/embedding.hpp"
#include "mrlab/parabolic.hpp"

namespace mrlab::driver {

/// Stream ids of the corpus generators; Monte Carlo searches use the low ids.
inline constexpr std::uint64_t kSpatialStream = 100;
inline constexpr std::uint64_t kTemporalStream = 1000;

/// Smooth time profile theta(t) = sum_{r=0..3} c_r cos(2 pi r t / T) + s_r sin(2 pi r t / T).
struct TimeProfile {
  double horizon = 1.0;
  std::vector<double> cos_coeff;
  std::vector<double> sin_coeff;
  double operator()(double t) const;
};

TimeProfile random_time_profile(std::uint64_t seed, std::uint64_t stream, double horizon);

/// Exact value of a band-limited function at an arbitrary point.
void evaluate_band_limited(const BandLimitedFunction& f, std::span<const double> x, std::span<Complex> out);

/// Band-limited members drawn on `coarse`, so every grid with the same extents
/// and at least as many points samples the same functions.
std::vector<BandLimitedFunction> spatial_members(const Grid& coarse, std::size_t components, std::size_t count,
                                                 std::uint64_t seed, double component_decay);

std::vector<GridFunction> sample_members(const std::vector<BandLimitedFunction>& members, const Grid& grid,
                                         const ValueSpace& space);

/// Separable forcing theta_i(t) b_i(x).
struct SeparableForcing {
  BandLimitedFunction space_part;
  TimeProfile time_part;

  Forcing as_forcing() const;
  std::vector<GridFunction> snapshots(const Grid& grid, const ValueSpace& space, std::size_t steps) const;
};

std::vector<SeparableForcing> separable_members(const Grid& coarse, std::size_t components, std::size_t count,
                                                std::uint64_t seed, double component_decay, double horizon);

}  // namespace mrlab::driver
