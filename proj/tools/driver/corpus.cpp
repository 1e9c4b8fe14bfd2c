#include "driver/corpus.hpp"

#include <cmath>
#include <numbers>

#include "mrlab/rng.hpp"

namespace mrlab::driver {

double TimeProfile::operator()(double t) const {
  double v = 0.0;
  const double w = 2.0 * std::numbers::pi * t / horizon;
  for (std::size_t r = 0; r < cos_coeff.size(); ++r) {
    v += cos_coeff[r] * std::cos(static_cast<double>(r) * w) + sin_coeff[r] * std::sin(static_cast<double>(r) * w);
  }
  return v;
}

TimeProfile random_time_profile(std::uint64_t seed, std::uint64_t stream, double horizon) {
  auto gen = make_stream(seed, stream);
  TimeProfile p;
  p.horizon = horizon;
  for (int r = 0; r < 4; ++r) {
    const double scale = 1.0 / (1.0 + r);
    p.cos_coeff.push_back(scale * standard_normal(gen));
    p.sin_coeff.push_back(r == 0 ? 0.0 : scale * standard_normal(gen));
  }
  return p;
}

void evaluate_band_limited(const BandLimitedFunction& f, std::span<const double> x, std::span<Complex> out) {
  for (auto& v : out) v = 0.0;
  for (std::size_t i = 0; i < f.modes.size(); ++i) {
    double phase = 0.0;
    for (std::size_t k = 0; k < f.extents.size(); ++k) {
      phase += std::numbers::pi * static_cast<double>(f.modes[i][k]) * x[k] / f.extents[k];
    }
    const Complex e = std::polar(1.0, phase);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += e * f.coefficients[i][static_cast<Eigen::Index>(j)];
  }
}

std::vector<BandLimitedFunction> spatial_members(const Grid& coarse, std::size_t components, std::size_t count,
                                                 std::uint64_t seed, double component_decay) {
  std::vector<BandLimitedFunction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_band_limited(coarse, components, seed, kSpatialStream + i, component_decay));
  }
  return out;
}

std::vector<GridFunction> sample_members(const std::vector<BandLimitedFunction>& members, const Grid& grid,
                                         const ValueSpace& space) {
  std::vector<GridFunction> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.sample(grid, space));
  return out;
}

Forcing SeparableForcing::as_forcing() const {
  return [self = *this](double t, std::span<const double> x, std::span<Complex> out) {
    evaluate_band_limited(self.space_part, x, out);
    const double theta = self.time_part(t);
    for (auto& v : out) v *= theta;
  };
}

std::vector<GridFunction> SeparableForcing::snapshots(const Grid& grid, const ValueSpace& space,
                                                      std::size_t steps) const {
  const GridFunction b = space_part.sample(grid, space);
  std::vector<GridFunction> out;
  out.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = time_part.horizon * static_cast<double>(i) / static_cast<double>(steps);
    out.push_back(Complex(time_part(t)) * b);
  }
  return out;
}

std::vector<SeparableForcing> separable_members(const Grid& coarse, std::size_t components, std::size_t count,
                                                std::uint64_t seed, double component_decay, double horizon) {
  const auto spatial = spatial_members(coarse, components, count, seed, component_decay);
  std::vector<SeparableForcing> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({spatial[i], random_time_profile(seed, kTemporalStream + i, horizon)});
  }
  return out;
}

}  // namespace mrlab::driver
