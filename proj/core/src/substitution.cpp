#include "mrlab/substitution.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <stdexcept>

#include "mrlab/errors.hpp"
#include "mrlab/report.hpp"

namespace mrlab {

namespace {

constexpr int kShells = 60;
constexpr double kUnitRatio = 1.0 - 1e-9;

}  // namespace

AxisSubstitution::AxisSubstitution(ScalarFunction gamma, double half_width, double divergence_threshold)
    : gamma_(std::move(gamma)), half_width_(half_width), threshold_(divergence_threshold) {
  if (!(half_width_ > 0.0)) throw std::invalid_argument("substitution half-width must be positive");
  tau_lo_ = integral_from_zero(-half_width_);
  tau_hi_ = integral_from_zero(half_width_);
}

// int_0^x dy / gamma(y) over geometric shells [|x| 2^{-k-1}, |x| 2^{-k}], closed
// by a geometric tail fitted to the last two shells.
double AxisSubstitution::integral_from_zero(double x) const {
  if (x == 0.0) return 0.0;
  const double s = x > 0.0 ? 1.0 : -1.0;
  const double a = std::abs(x);
  auto integrand = [&](double y) {
    const double g = gamma_(s * y);
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw ConditionViolation("integrability", "degeneracy function must be positive away from 0",
                               {{"x", format_double(s * y)}, {"gamma", format_double(g)}});
    }
    return 1.0 / g;
  };
  double total = 0.0;
  double last = 0.0;
  double before_last = 0.0;
  double hi = a;
  for (int k = 0; k < kShells; ++k) {
    const double lo = 0.5 * hi;
    const double piece = boost::math::quadrature::gauss<double, 20>::integrate(integrand, lo, hi);
    total += piece;
    before_last = last;
    last = piece;
    hi = lo;
  }
  const double rho = before_last > 0.0 ? last / before_last : 0.0;
  if (rho >= kUnitRatio || !std::isfinite(total)) {
    throw ConditionViolation("integrability", "1/gamma is not integrable at 0",
                             {{"shell_ratio", format_double(rho)}, {"x", format_double(x)}});
  }
  total += last * rho / (1.0 - rho);
  if (total > threshold_) {
    throw ConditionViolation("integrability", "1/gamma integral exceeds the divergence threshold",
                             {{"integral", format_double(total)}, {"threshold", format_double(threshold_)}});
  }
  return s * total;
}

double AxisSubstitution::tau(double x) const {
  if (x == -half_width_) return tau_lo_;
  if (x == half_width_) return tau_hi_;
  return integral_from_zero(x);
}

double AxisSubstitution::inverse(double t) const {
  if (t <= tau_lo_) return -half_width_;
  if (t >= tau_hi_) return half_width_;
  if (t == 0.0) return 0.0;
  double lo = t > 0.0 ? 0.0 : -half_width_;
  double hi = t > 0.0 ? half_width_ : 0.0;
  auto f = [&](double x) { return tau(x) - t; };
  std::uintmax_t iterations = 200;
  const auto root = boost::math::tools::toms748_solve(f, lo, hi, f(lo), f(hi),
                                                      boost::math::tools::eps_tolerance<double>(50),
                                                      iterations);
  return 0.5 * (root.first + root.second);
}

void Substitution::physical_point(std::size_t flat, std::span<double> out) const {
  const auto idx = tau_grid.unravel(flat);
  for (int k = 0; k < tau_grid.dim(); ++k) {
    out[static_cast<std::size_t>(k)] = x_nodes[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]];
  }
}

Substitution degenerate_substitution(const std::vector<ScalarFunction>& gamma, const Grid& grid,
                                     double divergence_threshold) {
  if (gamma.size() != static_cast<std::size_t>(grid.dim())) {
    throw std::invalid_argument("need one degeneracy function per axis");
  }
  std::vector<AxisSubstitution> axes;
  std::vector<double> half_widths;
  std::vector<double> centers;
  for (int k = 0; k < grid.dim(); ++k) {
    axes.emplace_back(gamma[static_cast<std::size_t>(k)], grid.extent(k), divergence_threshold);
    half_widths.push_back(0.5 * (axes.back().tau_max() - axes.back().tau_min()));
    centers.push_back(0.5 * (axes.back().tau_max() + axes.back().tau_min()));
  }
  Grid tau_grid(half_widths, grid.sizes());

  std::vector<std::vector<double>> nodes(static_cast<std::size_t>(grid.dim()));
  std::vector<std::vector<double>> offset_gamma(static_cast<std::size_t>(grid.dim()));
  for (int k = 0; k < grid.dim(); ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const double h = tau_grid.spacing(k);
    for (std::size_t j = 0; j < grid.size(k); ++j) {
      const double t = centers[ks] + tau_grid.coordinate(k, j);
      nodes[ks].push_back(j == 0 ? -grid.extent(k) : axes[ks].inverse(t));
      offset_gamma[ks].push_back(gamma[ks](axes[ks].inverse(t + 0.5 * h)));
    }
  }

  std::vector<double> induced(tau_grid.point_count());
  for (std::size_t p = 0; p < tau_grid.point_count(); ++p) {
    const auto idx = tau_grid.unravel(p);
    double w = 1.0;
    for (int k = 0; k < grid.dim(); ++k) {
      w *= offset_gamma[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]];
    }
    induced[p] = w;
  }
  Weight induced_weight = Weight::tabulated(tau_grid, std::move(induced));
  return Substitution{std::move(axes), std::move(tau_grid), std::move(centers), std::move(nodes),
                      std::move(induced_weight)};
}

}  // namespace mrlab
