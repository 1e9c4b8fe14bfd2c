#pragma once

#include <complex>
#include <vector>

#include "mrlab/positive_operator.hpp"

namespace mrlab {

/// S_phi = { z : |arg z| <= phi } together with z = 0.
class Sector {
 public:
  explicit Sector(double phi);

  double angle() const { return phi_; }
  bool contains(Complex z) const;

  /// 0 plus moduli log-spaced over [lo, hi] times angles uniform over [-phi, phi].
  std::vector<Complex> samples(int per_decade = 19, int angles = 33, double lo = 1e-3,
                               double hi = 1e6) const;

 private:
  double phi_;
};

/// max over sector samples of (1 + |z|) * ||(A + z)^{-1}||, a lower estimate of
/// the positivity constant M.
double positivity_bound(const PositiveOperator& a, double phi, int per_decade = 19,
                        int angles = 33);

}  // namespace mrlab
