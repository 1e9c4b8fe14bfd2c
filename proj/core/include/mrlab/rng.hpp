#pragma once

#include <cstdint>
#include <random>

#include "mrlab/grid_function.hpp"

namespace mrlab {

std::uint64_t splitmix64(std::uint64_t x);

/// Independent generator for (seed, stream); the stream id is a counter, so
/// draws do not depend on how work is scheduled.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

/// Uniform in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& gen);
double standard_normal(std::mt19937_64& gen);
Complex complex_normal(std::mt19937_64& gen);

}  // namespace mrlab
