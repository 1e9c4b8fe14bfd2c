#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mrlab/positive_operator.hpp"
#include "mrlab/principal_part.hpp"
#include "mrlab/rbound.hpp"
#include "mrlab/report.hpp"
#include "mrlab/symbol.hpp"
#include "mrlab/weight.hpp"

namespace mrlab {

/// f(t, x) written into out (N entries).
using Forcing = std::function<void(double t, std::span<const double> x, std::span<Complex> out)>;

struct ParabolicProblem {
  PrincipalPart principal;
  PositiveOperator a;
  double horizon = 1.0;
  std::size_t steps = 256;
  double p = 2.0;
  double p1 = 2.0;
  WeightSpec gamma;

  double dt() const { return horizon / static_cast<double>(steps); }
};

/// Snapshots at t_i = i T / steps, i = 0..steps.
std::vector<GridFunction> sample_forcing(const Grid& grid, const ValueSpace& space,
                                         const Forcing& f, double horizon, std::size_t steps);

struct CauchySolution {
  std::vector<GridFunction> u;
  std::vector<GridFunction> du_dt;
  double dt = 0.0;
};

/// u' + (K(xi) + A) u = f, u(0) = 0, solved mode by mode with the exact
/// exponential and f interpolated linearly between time nodes. Requires
/// Ellipticity with phi1 < pi / 2.
CauchySolution solve_cauchy(const ParabolicProblem& prob, std::span<const GridFunction> forcing);

/// Rows (forcing, lhs, rhs, ratio) with lhs = ||u_t|| + sum_{|alpha|=2l} ||D^alpha u|| + ||A u||
/// and rhs = ||f||, all in the mixed norm with exponents (p, p1).
EstimateReport maximal_regularity_report(const ParabolicProblem& prob,
                                         std::span<const std::vector<GridFunction>> forcings);

/// Both sides of the maximal regularity estimate for one solved forcing.
struct RegularityTerms {
  double lhs = 0.0;
  double rhs = 0.0;
};
RegularityTerms regularity_terms(const ParabolicProblem& prob, const CauchySolution& sol,
                                 std::span<const GridFunction> forcing, double p1, const Weight& gamma);

/// Phi(xi, lambda) = lambda (A + K(xi) + lambda)^{-1}
OperatorSymbol parabolic_phi(const PositiveOperator& a, const PrincipalPart& k, Complex lambda);

struct RPositivityResult {
  RBoundEstimate estimate;
  std::size_t skipped = 0;
};

/// R-bound estimate of {Phi(xi, lambda)} over every lattice xi and sampled lambda.
RPositivityResult rpositivity_symbol_check(const ParabolicProblem& prob, const Grid& grid,
                                           std::span<const Complex> lambdas,
                                           const RBoundOptions& options = {});

}  // namespace mrlab
