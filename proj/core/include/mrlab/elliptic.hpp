#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "mrlab/positive_operator.hpp"
#include "mrlab/principal_part.hpp"
#include "mrlab/report.hpp"
#include "mrlab/weight.hpp"

namespace mrlab {

/// A_alpha(x) D^alpha with |alpha| < 2l. The coefficient is an N x N matrix per
/// grid point, or a single matrix used at every point.
struct LowerOrderTerm {
  MultiIndex alpha;
  std::vector<Eigen::MatrixXcd> coefficient;
  double mu = 0.0;

  const Eigen::MatrixXcd& at(std::size_t point) const {
    return coefficient.size() == 1 ? coefficient.front() : coefficient[point];
  }
};

struct EllipticProblem {
  PrincipalPart principal;
  PositiveOperator a;
  std::vector<LowerOrderTerm> lower;
  Complex lambda = 0.0;
};

/// Throws std::invalid_argument unless lambda = 0 or |arg lambda| < pi - phi1.
void check_admissible_lambda(Complex lambda, double phi1);

/// u = F^{-1} [A + K(xi) + lambda]^{-1} f_hat; lower-order terms are ignored.
GridFunction solve_principal(const EllipticProblem& prob, const GridFunction& f);

/// sum a_alpha D^alpha u + A u + lambda u, plus the lower-order terms when requested.
GridFunction apply_elliptic(const EllipticProblem& prob, const GridFunction& u,
                            bool with_lower = true);
/// sum A_alpha(x) D^alpha u
GridFunction apply_lower_order(const EllipticProblem& prob, const GridFunction& u);

/// ||L u - f|| / ||f|| in the unweighted L_2 norm.
double relative_residual(const EllipticProblem& prob, const GridFunction& u,
                         const GridFunction& f, bool with_lower = true);

/// Rows (lambda_re, lambda_im, forcing, lhs, rhs, ratio) with
/// lhs = sum_{|alpha| <= 2l} |lambda|^{1-|alpha|/2l} ||D^alpha u|| + ||A u|| and rhs = ||f||.
EstimateReport coercive_report(const EllipticProblem& prob, std::span<const GridFunction> forcings,
                               std::span<const Complex> lambdas, double p = 2.0,
                               const WeightSpec& gamma = {});

struct NeumannOptions {
  double tolerance = 1e-10;
  int max_iterations = 200;
  int stall_window = 5;
};

struct PerturbedSolution {
  GridFunction u;
  int iterations = 0;
  std::vector<double> term_norms;
};

/// (L0 + lambda)^{-1} sum_k (-L1 (L0 + lambda)^{-1})^k f. Throws NonContraction
/// when the term norms fail to decrease over stall_window iterations.
PerturbedSolution solve_perturbed(const EllipticProblem& prob, const GridFunction& f,
                                  const NeumannOptions& options = {});

/// max over grid points of ||A_alpha(x) A^{-(1 - |alpha|/2l - mu_alpha)}|| per term.
std::vector<double> lower_order_condition_check(std::span<const LowerOrderTerm> terms,
                                                const PositiveOperator& a, int l);

}  // namespace mrlab
