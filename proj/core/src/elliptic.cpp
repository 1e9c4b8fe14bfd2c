#include "mrlab/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mrlab/derivative.hpp"
#include "mrlab/errors.hpp"
#include "mrlab/fourier.hpp"
#include "mrlab/norms.hpp"
#include "mrlab/operator_norm.hpp"
#include "mrlab/parallel.hpp"

namespace mrlab {

void check_admissible_lambda(Complex lambda, double phi1) {
  if (lambda == Complex(0.0)) return;
  if (!(std::abs(std::arg(lambda)) < std::numbers::pi - phi1)) {
    throw std::invalid_argument("lambda = " + format_double(lambda.real()) + "+" + format_double(lambda.imag()) +
                                "i lies outside the admissible sector |arg lambda| < pi - phi1 = " +
                                format_double(std::numbers::pi - phi1));
  }
}

namespace {

void require_operator(const EllipticProblem& prob, const GridFunction& f) {
  if (prob.a.dim() != f.components()) throw std::invalid_argument("operator does not act on the forcing's value space");
  if (prob.principal.dim() != f.grid().dim()) throw std::invalid_argument("problem and grid differ in dimension");
}

// w_hat <- [A + K(xi) + lambda]^{-1} w_hat
void resolve_in_place(const EllipticProblem& prob, const std::vector<Complex>& k, GridFunction& w_hat) {
  const Grid& grid = w_hat.grid();
  const PositiveOperator& a = prob.a;
  parallel_for(grid.point_count(), [&](std::size_t begin, std::size_t end) {
    std::vector<Complex> c(w_hat.components());
    for (std::size_t p = begin; p < end; ++p) {
      auto v = w_hat.at(p);
      a.to_eigenbasis(v, c);
      for (std::size_t i = 0; i < c.size(); ++i) {
        const Complex d = a.spectrum()[static_cast<Eigen::Index>(i)] + k[p] + prob.lambda;
        if (std::abs(d) <= 1e-14 * std::max(1.0, std::abs(k[p]))) {
          std::array<double, kMaxDim> xi{};
          grid.frequency_of(p, std::span<double>(xi.data(), static_cast<std::size_t>(grid.dim())));
          throw SingularityError("A + K(xi) + lambda is singular at xi_0 = " + format_double(xi[0]));
        }
        c[i] /= d;
      }
      a.from_eigenbasis(c, v);
    }
  });
}

}  // namespace

GridFunction solve_principal(const EllipticProblem& prob, const GridFunction& f) {
  require_operator(prob, f);
  const EllipticityData data = check_ellipticity(prob.principal, f.grid());
  check_admissible_lambda(prob.lambda, data.phi1);
  const auto k = prob.principal.lattice_symbol(f.grid());
  GridFunction w = forward_transform(f);
  resolve_in_place(prob, k, w);
  inverse_transform_inplace(w);
  return w;
}

GridFunction apply_lower_order(const EllipticProblem& prob, const GridFunction& u) {
  GridFunction out(u.grid(), u.space());
  const auto n = static_cast<Eigen::Index>(u.components());
  for (const LowerOrderTerm& term : prob.lower) {
    if (term.coefficient.size() != 1 && term.coefficient.size() != u.point_count()) {
      throw std::invalid_argument("lower-order coefficient must be sampled at every grid point");
    }
    const GridFunction d = spectral_derivative(u, term.alpha);
    for (std::size_t p = 0; p < u.point_count(); ++p) {
      Eigen::Map<const Eigen::VectorXcd> dv(d.at(p).data(), n);
      Eigen::Map<Eigen::VectorXcd> ov(out.at(p).data(), n);
      ov += term.at(p) * dv;
    }
  }
  return out;
}

GridFunction apply_elliptic(const EllipticProblem& prob, const GridFunction& u, bool with_lower) {
  require_operator(prob, u);
  const auto k = prob.principal.lattice_symbol(u.grid());
  GridFunction w = forward_transform(u);
  std::vector<Complex> av(u.components());
  for (std::size_t p = 0; p < u.point_count(); ++p) {
    auto v = w.at(p);
    prob.a.apply(v, av);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (k[p] + prob.lambda) * v[i] + av[i];
  }
  inverse_transform_inplace(w);
  if (with_lower && !prob.lower.empty()) w += apply_lower_order(prob, u);
  return w;
}

double relative_residual(const EllipticProblem& prob, const GridFunction& u, const GridFunction& f,
                         bool with_lower) {
  const double nf = lp_norm(f, 2.0);
  const double r = lp_norm(apply_elliptic(prob, u, with_lower) - f, 2.0);
  return nf > 0.0 ? r / nf : r;
}

EstimateReport coercive_report(const EllipticProblem& prob, std::span<const GridFunction> forcings,
                               std::span<const Complex> lambdas, double p, const WeightSpec& gamma) {
  EstimateReport report;
  report.name = "coercive";
  report.param_names = {"lambda_re", "lambda_im", "forcing"};
  if (forcings.empty()) return report;
  const Grid& grid = forcings.front().grid();
  const Weight w = gamma.on(grid);
  const int two_l = 2 * prob.principal.order();
  const auto alphas = multi_indices_up_to(grid.dim(), two_l);
  for (const Complex& lambda : lambdas) {
    EllipticProblem local = prob;
    local.lambda = lambda;
    local.lower.clear();
    for (std::size_t i = 0; i < forcings.size(); ++i) {
      const GridFunction& f = forcings[i];
      const double rhs = weighted_lp_norm(f, p, w);
      if (rhs == 0.0) {
        ++report.skipped;
        continue;
      }
      const GridFunction u = solve_principal(local, f);
      const GridFunction u_hat = forward_transform(u);
      double lhs = 0.0;
      for (const MultiIndex& alpha : alphas) {
        const double power = 1.0 - static_cast<double>(alpha.total()) / two_l;
        if (power > 0.0 && lambda == Complex(0.0)) continue;
        GridFunction d = u_hat;
        multiply_derivative_symbol(d, alpha);
        inverse_transform_inplace(d);
        lhs += std::pow(std::abs(lambda), power) * weighted_lp_norm(d, p, w);
      }
      GridFunction au(u.grid(), u.space());
      for (std::size_t x = 0; x < u.point_count(); ++x) local.a.apply(u.at(x), au.at(x));
      lhs += weighted_lp_norm(au, p, w);
      report.add({lambda.real(), lambda.imag(), static_cast<double>(i)}, lhs, rhs);
    }
  }
  return report;
}

PerturbedSolution solve_perturbed(const EllipticProblem& prob, const GridFunction& f,
                                  const NeumannOptions& options) {
  PerturbedSolution out{GridFunction(f.grid(), f.space()), 0, {}};
  const double nf = lp_norm(f, 2.0);
  if (nf == 0.0) return out;
  GridFunction g = f;
  for (int k = 0; k < options.max_iterations; ++k) {
    const GridFunction v = solve_principal(prob, g);
    out.u += v;
    out.iterations = k + 1;
    if (prob.lower.empty()) return out;
    g = apply_lower_order(prob, v);
    g *= -1.0;
    const double ng = lp_norm(g, 2.0);
    out.term_norms.push_back(ng);
    if (ng <= options.tolerance * nf) return out;
    const auto& t = out.term_norms;
    const auto window = static_cast<std::size_t>(options.stall_window);
    if (t.size() > window) {
      bool nondecreasing = true;
      for (std::size_t i = t.size() - window; i < t.size(); ++i) {
        if (t[i] < t[i - 1]) nondecreasing = false;
      }
      if (nondecreasing) {
        throw NonContraction("contraction", "lambda too small: Neumann series does not contract",
                             {{"lambda_re", format_double(prob.lambda.real())},
                              {"lambda_im", format_double(prob.lambda.imag())},
                              {"iteration", std::to_string(k + 1)},
                              {"term_norm", format_double(ng)}});
      }
    }
  }
  throw NonContraction("contraction", "Neumann series did not reach the tolerance",
                       {{"iterations", std::to_string(options.max_iterations)},
                        {"term_norm", format_double(out.term_norms.back())}});
}

std::vector<double> lower_order_condition_check(std::span<const LowerOrderTerm> terms, const PositiveOperator& a,
                                                int l) {
  std::vector<double> out;
  for (const LowerOrderTerm& term : terms) {
    const double top = 1.0 - static_cast<double>(term.alpha.total()) / (2.0 * l);
    if (!(term.mu > 0.0) || !(term.mu < top)) {
      throw std::invalid_argument("lower-order exponent mu_alpha must lie in (0, 1 - |alpha|/2l)");
    }
    const double theta = -(top - term.mu);
    const Eigen::MatrixXcd power = a.function([theta](double m) { return std::pow(m, theta); }).cast<Complex>();
    double best = 0.0;
    for (const auto& c : term.coefficient) best = std::max(best, operator_norm(c * power, a.space().q));
    out.push_back(best);
  }
  return out;
}

}  // namespace mrlab
