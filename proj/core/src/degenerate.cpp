#include "mrlab/degenerate.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mrlab/ap_weight.hpp"
#include "mrlab/derivative.hpp"
#include "mrlab/errors.hpp"
#include "mrlab/fourier.hpp"
#include "mrlab/norms.hpp"
#include "mrlab/report.hpp"

namespace mrlab {

GridFunction degenerate_derivative(const GridFunction& u, const Substitution& sub, const MultiIndex& alpha) {
  if (!(u.grid() == sub.tau_grid)) throw std::invalid_argument("function does not live on the tau-grid");
  // The alpha_k factors on an axis are multiplied in symbol space before the
  // Nyquist rule is applied; applying them one at a time would drop the Nyquist
  // mode for every even power.
  GridFunction w = forward_transform(u);
  for (int k = 0; k < alpha.dim(); ++k) {
    if (alpha[k] == 0) continue;
    MultiIndex axis_power = MultiIndex::zero(alpha.dim());
    axis_power.orders[static_cast<std::size_t>(k)] = alpha[k];
    multiply_derivative_symbol(w, axis_power);
  }
  inverse_transform_inplace(w);
  return w;
}

namespace {

std::vector<GridFunction> sample_on_nodes(const Substitution& sub, const ValueSpace& space, const Forcing& f,
                                          double horizon, std::size_t steps) {
  const Grid& grid = sub.tau_grid;
  std::vector<GridFunction> out;
  out.reserve(steps + 1);
  std::array<double, kMaxDim> x{};
  const std::span<double> xs(x.data(), static_cast<std::size_t>(grid.dim()));
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = horizon * static_cast<double>(i) / static_cast<double>(steps);
    GridFunction g(grid, space);
    for (std::size_t p = 0; p < grid.point_count(); ++p) {
      sub.physical_point(p, xs);
      f(t, xs, g.at(p));
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

DegenerateSolution solve_degenerate(const std::vector<ScalarFunction>& gamma, const ParabolicProblem& prob,
                                    const Grid& x_grid, std::size_t components, const Forcing& f,
                                    const DegenerateOptions& options) {
  Substitution sub = degenerate_substitution(gamma, x_grid, options.divergence_threshold);
  const double ap = ap_constant(sub.induced, prob.p, default_cube_family(sub.tau_grid));
  if (!(ap <= options.ap_threshold)) {
    throw ConditionViolation("ap-weight", "induced weight fails the A_p check on the tau-grid",
                             {{"ap_constant", format_double(ap)}, {"threshold", format_double(options.ap_threshold)}});
  }
  const auto q_forcing =
      sample_on_nodes(sub, ValueSpace(components, prob.a.space().q), f, prob.horizon, prob.steps);
  CauchySolution sol = solve_cauchy(prob, q_forcing);

  std::vector<double> res_norms;
  std::vector<double> f_norms;
  for (std::size_t i = 0; i < sol.u.size(); ++i) {
    GridFunction r = sol.du_dt[i];
    for (const PrincipalTerm& term : prob.principal.terms()) {
      r.axpy(term.coefficient, degenerate_derivative(sol.u[i], sub, term.alpha));
    }
    GridFunction au(sol.u[i].grid(), sol.u[i].space());
    for (std::size_t x = 0; x < au.point_count(); ++x) prob.a.apply(sol.u[i].at(x), au.at(x));
    r += au;
    r -= q_forcing[i];
    res_norms.push_back(lp_norm(r, 2.0));
    f_norms.push_back(lp_norm(q_forcing[i], 2.0));
  }
  const double nf = mixed_norm_from_spatial(f_norms, 2.0, sol.dt);
  const double nr = mixed_norm_from_spatial(res_norms, 2.0, sol.dt);

  DegenerateSolution out{std::move(sub), std::move(sol), ap, nf > 0.0 ? nr / nf : nr, {}};
  out.report.name = "degenerate";
  out.report.param_names = {"forcing"};
  const RegularityTerms t = regularity_terms(prob, out.solution, q_forcing, prob.p1, out.substitution.induced);
  out.report.add({0.0}, t.lhs, t.rhs);
  return out;
}

GridFunction resample_to_x_grid(const GridFunction& u_tau, const Substitution& sub, const Grid& x_grid) {
  if (!(u_tau.grid() == sub.tau_grid)) throw std::invalid_argument("function does not live on the tau-grid");
  if (x_grid.sizes() != sub.tau_grid.sizes()) throw std::invalid_argument("x-grid and tau-grid sizes differ");
  const Grid& grid = sub.tau_grid;
  GridFunction w = forward_transform(u_tau);
  const std::size_t comps = u_tau.components();

  // Evaluate the trigonometric interpolant axis by axis; the Nyquist mode is
  // split evenly between +m/2 and -m/2 so real data stays real.
  for (int k = 0; k < grid.dim(); ++k) {
    const std::size_t m = grid.size(k);
    const double t_half = grid.extent(k);
    const auto ks = static_cast<std::size_t>(k);
    Eigen::MatrixXcd eval(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t jo = 0; jo < m; ++jo) {
      const double s = sub.axes[ks].tau(x_grid.coordinate(k, jo)) - sub.tau_center[ks] + t_half;
      for (std::size_t j = 0; j < m; ++j) {
        const double kw = static_cast<double>(grid.wavenumber(k, j));
        Complex e = std::polar(1.0, std::numbers::pi * kw * s / t_half);
        if (grid.is_nyquist(k, j)) e = std::cos(std::numbers::pi * kw * s / t_half);
        eval(static_cast<Eigen::Index>(jo), static_cast<Eigen::Index>(j)) = e;
      }
    }
    GridFunction next(grid, u_tau.space());
    for (std::size_t p = 0; p < grid.point_count(); ++p) {
      auto idx = grid.unravel(p);
      const std::size_t jo = idx[ks];
      for (std::size_t j = 0; j < m; ++j) {
        idx[ks] = j;
        const std::size_t src = grid.ravel(std::span<const std::size_t>(idx.data(), static_cast<std::size_t>(grid.dim())));
        const Complex e = eval(static_cast<Eigen::Index>(jo), static_cast<Eigen::Index>(j));
        for (std::size_t c = 0; c < comps; ++c) next(p, c) += e * w(src, c);
      }
    }
    w = std::move(next);
  }
  return GridFunction(x_grid, u_tau.space(), std::vector<Complex>(w.values().begin(), w.values().end()));
}

}  // namespace mrlab
