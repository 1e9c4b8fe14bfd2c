#pragma once

#include <string>
#include <vector>

#include "mrlab/rbound.hpp"
#include "mrlab/symbol.hpp"

namespace mrlab {

struct MikhlinOptions {
  /// |xi_k| ranges over [2^{-range}, 2^{range}] on both signs.
  double range_exponent = 8.0;
  int points_per_axis = 33;
  double relative_step = 1e-4;
  /// Use |xi|^{|beta|} in place of xi^beta.
  bool radial = false;
  double overflow = 1e12;
  RBoundOptions rbound;
};

struct MikhlinTerm {
  MultiIndex beta;
  RBoundEstimate estimate;
  bool finite = true;
};

struct MikhlinCertificate {
  std::vector<MikhlinTerm> terms;
  double total = 0.0;
  bool bounded = true;
  std::string reason;
};

/// Log-spaced evaluation nodes of one axis, negative and positive.
std::vector<double> mikhlin_axis_nodes(const MikhlinOptions& options);

/// R-bound estimates of {xi^beta D^beta M(xi)} for every beta in {0,1}^n and their sum.
MikhlinCertificate mikhlin_certificate(const OperatorSymbol& m, int n, const ValueSpace& space,
                                       const MikhlinOptions& options = {});

struct MikhlinGrowth {
  std::vector<double> range_exponents;
  std::vector<MikhlinCertificate> certificates;
  bool bounded = true;
};

/// Repeats the certificate on widening ranges, keeping the node density per
/// octave fixed; a total that keeps growing by more than growth_tol marks the
/// symbol as unbounded.
MikhlinGrowth mikhlin_growth_check(const OperatorSymbol& m, int n, const ValueSpace& space,
                                   const MikhlinOptions& options,
                                   std::vector<double> range_exponents = {8.0, 16.0, 32.0},
                                   double growth_tol = 1.25);

}  // namespace mrlab
