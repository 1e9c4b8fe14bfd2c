#pragma once

#include "mrlab/parabolic.hpp"

namespace mrlab {

struct SystemReport {
  /// Mixed (p, p1) norm variant.
  EstimateReport mixed;
  /// Same estimate with p1 = p.
  EstimateReport spatial;
  double c0 = 0.0;
};

/// Checks positivity of the coupling matrix (ConditionViolation("coupling-positivity") when
/// it fails) and solves through its eigendecomposition.
CauchySolution solve_system(const ParabolicProblem& prob, std::span<const GridFunction> forcing);

SystemReport system_report(const ParabolicProblem& prob,
                           std::span<const std::vector<GridFunction>> forcings);

}  // namespace mrlab
