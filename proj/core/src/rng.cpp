#include "mrlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace mrlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~stream)));
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& gen) {
  const double u1 = 1.0 - uniform01(gen);
  const double u2 = uniform01(gen);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex complex_normal(std::mt19937_64& gen) {
  const double re = standard_normal(gen);
  const double im = standard_normal(gen);
  return {re, im};
}

}  // namespace mrlab
