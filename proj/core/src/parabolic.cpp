#include "mrlab/parabolic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mrlab/derivative.hpp"
#include "mrlab/errors.hpp"
#include "mrlab/fourier.hpp"
#include "mrlab/norms.hpp"
#include "mrlab/parallel.hpp"
#include "mrlab/report.hpp"

namespace mrlab {

std::vector<GridFunction> sample_forcing(const Grid& grid, const ValueSpace& space, const Forcing& f,
                                         double horizon, std::size_t steps) {
  if (steps == 0 || !(horizon > 0.0)) throw std::invalid_argument("time grid needs T > 0 and at least one step");
  std::vector<GridFunction> out;
  out.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = horizon * static_cast<double>(i) / static_cast<double>(steps);
    out.push_back(GridFunction::sample(grid, space, [&](std::span<const double> x, std::span<Complex> v) { f(t, x, v); }));
  }
  return out;
}

namespace {

// Weights of v(t + dt) = E v(t) + wa g(t) + wb g(t + dt) for v' + z v = g with
// g linear on the step: wa = dt (1 - E - xE)/x^2, wb = dt (x - 1 + E)/x^2, x = z dt.
struct StepWeights {
  Complex e;
  Complex wa;
  Complex wb;
};

StepWeights step_weights(Complex z, double dt) {
  const Complex x = z * dt;
  const Complex e = std::exp(-x);
  if (std::abs(x) < 0.1) {
    Complex wa(0.0);
    Complex wb(0.0);
    Complex xk(1.0);
    double fact = 2.0;  // (k + 2)!
    for (int k = 0; k < 14; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      wa += sign * static_cast<double>(k + 1) / fact * xk;
      wb += sign / fact * xk;
      xk *= x;
      fact *= static_cast<double>(k + 3);
    }
    return {e, dt * wa, dt * wb};
  }
  const Complex x2 = x * x;
  return {e, dt * (1.0 - e - x * e) / x2, dt * (x - 1.0 + e) / x2};
}

double require_parabolic(const ParabolicProblem& prob, const Grid& grid) {
  const EllipticityData data = check_ellipticity(prob.principal, grid);
  if (!(data.phi1 < 0.5 * std::numbers::pi)) {
    throw ConditionViolation("ellipticity", "parabolic problems need phi1 < pi/2",
                             {{"phi1", format_double(data.phi1)}});
  }
  return data.phi1;
}

}  // namespace

CauchySolution solve_cauchy(const ParabolicProblem& prob, std::span<const GridFunction> forcing) {
  if (forcing.size() != prob.steps + 1) {
    throw std::invalid_argument("forcing needs steps + 1 snapshots");
  }
  const Grid& grid = forcing.front().grid();
  const std::size_t n = forcing.front().components();
  if (prob.a.dim() != n) throw std::invalid_argument("operator does not act on the forcing's value space");
  for (const GridFunction& f : forcing) require_same_shape(f, forcing.front(), "solve_cauchy");
  require_parabolic(prob, grid);

  const double dt = prob.dt();
  const auto k = prob.principal.lattice_symbol(grid);
  std::vector<GridFunction> f_hat;
  f_hat.reserve(forcing.size());
  for (const GridFunction& f : forcing) f_hat.push_back(forward_transform(f));

  CauchySolution sol;
  sol.dt = dt;
  sol.u.assign(forcing.size(), GridFunction(grid, forcing.front().space()));
  sol.du_dt.assign(forcing.size(), GridFunction(grid, forcing.front().space()));

  const PositiveOperator& a = prob.a;
  parallel_for(grid.point_count(), [&](std::size_t begin, std::size_t end) {
    std::vector<Complex> g(n), g_prev(n), v(n), tmp(n), z(n);
    std::vector<StepWeights> w(n);
    for (std::size_t p = begin; p < end; ++p) {
      for (std::size_t e = 0; e < n; ++e) {
        z[e] = k[p] + a.spectrum()[static_cast<Eigen::Index>(e)];
        w[e] = step_weights(z[e], dt);
        v[e] = 0.0;
      }
      a.to_eigenbasis(f_hat[0].at(p), g_prev);
      a.from_eigenbasis(g_prev, sol.du_dt[0].at(p));
      for (std::size_t i = 1; i < f_hat.size(); ++i) {
        a.to_eigenbasis(f_hat[i].at(p), g);
        for (std::size_t e = 0; e < n; ++e) {
          v[e] = w[e].e * v[e] + w[e].wa * g_prev[e] + w[e].wb * g[e];
          tmp[e] = g[e] - z[e] * v[e];
        }
        a.from_eigenbasis(v, sol.u[i].at(p));
        a.from_eigenbasis(tmp, sol.du_dt[i].at(p));
        std::swap(g, g_prev);
      }
    }
  });
  for (std::size_t i = 1; i < sol.u.size(); ++i) inverse_transform_inplace(sol.u[i]);
  for (GridFunction& d : sol.du_dt) inverse_transform_inplace(d);
  return sol;
}

RegularityTerms regularity_terms(const ParabolicProblem& prob, const CauchySolution& sol,
                                 std::span<const GridFunction> forcing, double p1, const Weight& gamma) {
  const std::size_t count = sol.u.size();
  if (forcing.size() != count) throw std::invalid_argument("solution and forcing differ in length");
  const auto alphas = multi_indices_of_order(prob.principal.dim(), 2 * prob.principal.order());
  const std::size_t series = 3 + alphas.size();
  // Columns: u_t, A u, f, then D^alpha u for each top-order alpha.
  std::vector<std::vector<double>> spatial(series, std::vector<double>(count, 0.0));
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const GridFunction& u = sol.u[i];
      spatial[0][i] = weighted_lp_norm(sol.du_dt[i], prob.p, gamma);
      GridFunction au(u.grid(), u.space());
      for (std::size_t x = 0; x < u.point_count(); ++x) prob.a.apply(u.at(x), au.at(x));
      spatial[1][i] = weighted_lp_norm(au, prob.p, gamma);
      spatial[2][i] = weighted_lp_norm(forcing[i], prob.p, gamma);
      const GridFunction u_hat = forward_transform(u);
      for (std::size_t j = 0; j < alphas.size(); ++j) {
        GridFunction d = u_hat;
        multiply_derivative_symbol(d, alphas[j]);
        inverse_transform_inplace(d);
        spatial[3 + j][i] = weighted_lp_norm(d, prob.p, gamma);
      }
    }
  });
  RegularityTerms out;
  for (std::size_t s = 0; s < series; ++s) {
    const double v = mixed_norm_from_spatial(spatial[s], p1, sol.dt);
    if (s == 2) {
      out.rhs = v;
    } else {
      out.lhs += v;
    }
  }
  return out;
}

EstimateReport maximal_regularity_report(const ParabolicProblem& prob,
                                         std::span<const std::vector<GridFunction>> forcings) {
  EstimateReport report;
  report.name = "maximal-regularity";
  report.param_names = {"forcing"};
  for (std::size_t i = 0; i < forcings.size(); ++i) {
    const auto& f = forcings[i];
    const Weight gamma = prob.gamma.on(f.front().grid());
    bool zero = true;
    for (const GridFunction& s : f) zero = zero && s.max_abs() == 0.0;
    if (zero) {
      ++report.skipped;
      continue;
    }
    const CauchySolution sol = solve_cauchy(prob, f);
    const RegularityTerms t = regularity_terms(prob, sol, f, prob.p1, gamma);
    report.add({static_cast<double>(i)}, t.lhs, t.rhs);
  }
  return report;
}

OperatorSymbol parabolic_phi(const PositiveOperator& a, const PrincipalPart& k, Complex lambda) {
  return OperatorSymbol::spectral(
      a,
      [k, lambda](const FrequencyPoint& p, double mu) {
        const Complex d = mu + k.symbol(p.xi, p.nyquist) + lambda;
        if (std::abs(d) <= 1e-14 * std::max(1.0, std::abs(lambda))) {
          throw SingularityError("A + K(xi) + lambda is singular");
        }
        return lambda / d;
      },
      "parabolic-phi");
}

RPositivityResult rpositivity_symbol_check(const ParabolicProblem& prob, const Grid& grid,
                                           std::span<const Complex> lambdas, const RBoundOptions& options) {
  if (lambdas.empty()) throw std::invalid_argument("R-positivity check needs at least one lambda sample");
  const auto k = prob.principal.lattice_symbol(grid);
  RPositivityResult out;
  std::vector<Eigen::MatrixXcd> family;
  const auto n = static_cast<Eigen::Index>(prob.a.dim());
  const Eigen::MatrixXcd v = prob.a.basis().cast<Complex>();
  for (const Complex& lambda : lambdas) {
    for (std::size_t p = 0; p < grid.point_count(); ++p) {
      Eigen::VectorXcd d(n);
      bool singular = false;
      for (Eigen::Index i = 0; i < n; ++i) {
        const Complex den = prob.a.spectrum()[i] + k[p] + lambda;
        if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(lambda))) {
          singular = true;
          break;
        }
        d[i] = lambda / den;
      }
      if (singular) {
        ++out.skipped;
        continue;
      }
      if (prob.a.is_diagonal()) {
        family.emplace_back(d.asDiagonal());
      } else {
        family.emplace_back(v * d.asDiagonal() * v.transpose());
      }
    }
  }
  if (family.empty()) throw std::invalid_argument("every (xi, lambda) sample was singular");
  out.estimate = r_bound_estimate(family, prob.a.space().q, options, "lambda (A + L0(xi) + lambda)^{-1}");
  return out;
}

}  // namespace mrlab
