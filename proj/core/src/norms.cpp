#include "mrlab/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "mrlab/derivative.hpp"
#include "mrlab/positive_operator.hpp"

namespace mrlab {

namespace {

void require_weight_grid(const GridFunction& u, const Weight& gamma) {
  if (!(gamma.grid() == u.grid())) throw std::invalid_argument("weight sampled on a different grid");
}

void require_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must be finite and >= 1");
}

}  // namespace

double lq_norm(std::span<const Complex> v, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (const Complex& z : v) m = std::max(m, std::abs(z));
    return m;
  }
  if (q == 2.0) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
  }
  double s = 0.0;
  for (const Complex& z : v) s += std::pow(std::abs(z), q);
  return std::pow(s, 1.0 / q);
}

double weighted_lp_norm(const GridFunction& u, double p, const Weight& gamma) {
  require_p(p);
  require_weight_grid(u, gamma);
  const double q = u.space().q;
  double s = 0.0;
  for (std::size_t x = 0; x < u.point_count(); ++x) {
    s += std::pow(lq_norm(u.at(x), q), p) * gamma[x];
  }
  return std::pow(s * u.grid().cell_volume(), 1.0 / p);
}

double lp_norm(const GridFunction& u, double p) {
  return weighted_lp_norm(u, p, Weight::constant(u.grid()));
}

double graph_lp_norm(const GridFunction& u, const PositiveOperator& a, double theta, double p,
                     const Weight& gamma) {
  require_p(p);
  require_weight_grid(u, gamma);
  if (a.dim() != u.components()) throw std::invalid_argument("operator acts on a different value space");
  const double q = u.space().q;
  std::vector<Complex> w(u.components());
  double s = 0.0;
  for (std::size_t x = 0; x < u.point_count(); ++x) {
    a.apply_power(theta, u.at(x), w);
    s += (std::pow(lq_norm(u.at(x), q), p) + std::pow(lq_norm(w, q), p)) * gamma[x];
  }
  return std::pow(s * u.grid().cell_volume(), 1.0 / p);
}

double sobolev_lions_norm(const GridFunction& u, const Anisotropy& l, const PositiveOperator& a,
                          double p, const Weight& gamma) {
  if (l.dim() != u.grid().dim()) throw std::invalid_argument("anisotropy dimension mismatch");
  double total = graph_lp_norm(u, a, 1.0, p, gamma);
  for (int k = 0; k < l.dim(); ++k) {
    total += weighted_lp_norm(spectral_derivative(u, l.pure(k)), p, gamma);
  }
  return total;
}

std::vector<double> time_weights(std::size_t snapshots, double dt) {
  if (snapshots == 0) return {};
  if (snapshots == 1) return {dt};
  std::vector<double> w(snapshots, dt);
  w.front() = w.back() = 0.5 * dt;
  return w;
}

double mixed_norm_from_spatial(std::span<const double> spatial_norms, double p1, double dt) {
  require_p(p1);
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const auto w = time_weights(spatial_norms.size(), dt);
  double s = 0.0;
  for (std::size_t i = 0; i < spatial_norms.size(); ++i) s += w[i] * std::pow(spatial_norms[i], p1);
  return std::pow(s, 1.0 / p1);
}

double mixed_norm(std::span<const GridFunction> snapshots, double p, double p1, const Weight& gamma,
                  double dt) {
  std::vector<double> spatial;
  spatial.reserve(snapshots.size());
  for (const GridFunction& f : snapshots) {
    if (!f.same_shape(snapshots.front())) throw std::invalid_argument("mixed_norm: snapshot shape mismatch");
    spatial.push_back(weighted_lp_norm(f, p, gamma));
  }
  return mixed_norm_from_spatial(spatial, p1, dt);
}

}  // namespace mrlab
