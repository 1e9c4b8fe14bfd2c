#pragma once

#include <span>
#include <vector>

#include "mrlab/grid_function.hpp"

namespace mrlab {

struct PrincipalTerm {
  MultiIndex alpha;
  Complex coefficient;
};

/// Top-order part sum_{|alpha| = 2l} a_alpha D^alpha with symbol
/// K(xi) = sum a_alpha (i xi)^alpha.
class PrincipalPart {
 public:
  PrincipalPart(int n, int l, std::vector<PrincipalTerm> terms);
  /// (-1)^l sum_k D_k^{2l}, so K(xi) = sum_k xi_k^{2l}.
  static PrincipalPart laplacian(int n, int l = 1);

  int dim() const { return n_; }
  int order() const { return l_; }
  const std::vector<PrincipalTerm>& terms() const { return terms_; }

  /// Discrete symbol at a lattice point, using the derivative Nyquist convention.
  Complex symbol(const Grid& grid, std::size_t flat) const;
  /// Symbol at an arbitrary frequency; axes flagged in `nyquist` drop odd orders.
  Complex symbol(std::span<const double> xi, unsigned nyquist = 0) const;
  std::vector<Complex> lattice_symbol(const Grid& grid) const;

 private:
  int n_;
  int l_;
  std::vector<PrincipalTerm> terms_;
};

struct EllipticityData {
  double phi1 = 0.0;
  double m0 = 0.0;
};

/// phi1 = max |arg K|, M0 = min |K| / sum xi_k^{2l} over nonzero lattice points.
/// Throws ConditionViolation("ellipticity") when M0 <= 1e-12 or phi1 >= pi.
EllipticityData check_ellipticity(const PrincipalPart& k, const Grid& grid);

}  // namespace mrlab
