#pragma once

#include <functional>
#include <vector>

#include "mrlab/weight.hpp"

namespace mrlab {

using ScalarFunction = std::function<double(double)>;

/// tau(x) = int_0^x dy / gamma(y) for one axis, with its monotone inverse.
class AxisSubstitution {
 public:
  /// Throws ConditionViolation("integrability") when 1/gamma is not integrable at 0
  /// on [-half_width, half_width].
  AxisSubstitution(ScalarFunction gamma, double half_width, double divergence_threshold = 1e8);

  double tau(double x) const;
  double inverse(double t) const;
  double gamma(double x) const { return gamma_(x); }
  double tau_min() const { return tau_lo_; }
  double tau_max() const { return tau_hi_; }

 private:
  double integral_from_zero(double x) const;

  ScalarFunction gamma_;
  double half_width_;
  double threshold_;
  double tau_lo_ = 0.0;
  double tau_hi_ = 0.0;
};

/// The change of variables x_k -> tau_k on every axis together with the
/// uniform tau-grid, the physical nodes x(tau_j) and the induced weight
/// gamma~(tau) = prod_k gamma_k(x_k(tau_k)).
struct Substitution {
  std::vector<AxisSubstitution> axes;
  Grid tau_grid;
  /// Midpoint of [tau(-L_k), tau(L_k)]; tau-grid coordinates are shifted by it.
  std::vector<double> tau_center;
  /// Physical coordinate of every tau-grid node, per axis.
  std::vector<std::vector<double>> x_nodes;
  Weight induced;

  /// Physical coordinates of a flat tau-grid point.
  void physical_point(std::size_t flat, std::span<double> out) const;
};

Substitution degenerate_substitution(const std::vector<ScalarFunction>& gamma, const Grid& grid,
                                     double divergence_threshold = 1e8);

}  // namespace mrlab
