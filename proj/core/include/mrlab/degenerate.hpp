#pragma once

#include <vector>

#include "mrlab/parabolic.hpp"
#include "mrlab/substitution.hpp"

namespace mrlab {

struct DegenerateOptions {
  double divergence_threshold = 1e8;
  /// Largest admissible dyadic A_p constant of the induced weight.
  double ap_threshold = 10.0;
};

struct DegenerateSolution {
  Substitution substitution;
  /// Solution on the tau-grid; node j sits at x(tau_j).
  CauchySolution solution;
  double ap_constant = 1.0;
  double residual = 0.0;
  EstimateReport report;
};

/// (gamma_k d/dx_k)^{alpha_k}. Each factor equals d/dtau_k, so the product is an
/// exact spectral derivative on the tau-grid.
GridFunction degenerate_derivative(const GridFunction& u, const Substitution& sub,
                                   const MultiIndex& alpha);

/// Solves u_t + sum a_alpha D^[alpha] u + A u = f on the x-grid by passing to tau
/// coordinates. Throws ConditionViolation(integrability) for a non-integrable 1/gamma_k
/// and ConditionViolation(ap-weight) when the induced weight fails the A_p check.
DegenerateSolution solve_degenerate(const std::vector<ScalarFunction>& gamma,
                                    const ParabolicProblem& prob, const Grid& x_grid,
                                    std::size_t components, const Forcing& f,
                                    const DegenerateOptions& options = {});

/// Trigonometric interpolation of a tau-grid function back to the uniform x-grid.
GridFunction resample_to_x_grid(const GridFunction& u_tau, const Substitution& sub,
                                const Grid& x_grid);

}  // namespace mrlab
