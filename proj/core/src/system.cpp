#include "mrlab/system.hpp"

#include "mrlab/errors.hpp"
#include "mrlab/report.hpp"

namespace mrlab {

namespace {

double require_coupling_positivity(const PositiveOperator& a) {
  const double c0 = ellipticity_constant(a.matrix());
  if (!(c0 > 0.0)) {
    throw ConditionViolation("coupling-positivity", "coupling matrix is not positive definite", {{"C0", format_double(c0)}});
  }
  return c0;
}

}  // namespace

CauchySolution solve_system(const ParabolicProblem& prob, std::span<const GridFunction> forcing) {
  require_coupling_positivity(prob.a);
  return solve_cauchy(prob, forcing);
}

SystemReport system_report(const ParabolicProblem& prob, std::span<const std::vector<GridFunction>> forcings) {
  SystemReport out;
  out.c0 = require_coupling_positivity(prob.a);
  out.mixed.name = "system-mixed";
  out.spatial.name = "system-spatial";
  out.mixed.param_names = out.spatial.param_names = {"forcing"};
  for (std::size_t i = 0; i < forcings.size(); ++i) {
    const auto& f = forcings[i];
    const Weight gamma = prob.gamma.on(f.front().grid());
    const CauchySolution sol = solve_system(prob, f);
    const RegularityTerms mixed = regularity_terms(prob, sol, f, prob.p1, gamma);
    const RegularityTerms spatial = regularity_terms(prob, sol, f, prob.p, gamma);
    out.mixed.add({static_cast<double>(i)}, mixed.lhs, mixed.rhs);
    out.spatial.add({static_cast<double>(i)}, spatial.lhs, spatial.rhs);
  }
  return out;
}

}  // namespace mrlab
