#pragma once

#include <span>
#include <vector>

#include "mrlab/report.hpp"
#include "mrlab/symbol.hpp"
#include "mrlab/weight.hpp"

namespace mrlab {

struct EmbeddingCase {
  Anisotropy l;
  MultiIndex alpha;
  double mu = 0.0;
  double h = 1.0;
  double h0 = 1.0;
  PositiveOperator a = PositiveOperator::identity(1);
  double p = 2.0;
  WeightSpec gamma;

  double kappa() const { return l.kappa(alpha); }
  /// Throws std::invalid_argument outside kappa <= 1, 0 <= mu <= 1 - kappa, h > 0.
  void validate() const;
};

/// Psi_h(xi) = |xi|^alpha A^{1-kappa-mu} h^{-mu} [A + sum_k |xi_k|^{l_k} + 1/h]^{-1}
OperatorSymbol psi_h_symbol(const EmbeddingCase& c);

/// sup over the lattice of ||Psi_h(xi)||.
double psi_h_lattice_sup(const EmbeddingCase& c, const Grid& grid);

std::vector<double> log_spaced(double lo, double hi, std::size_t count);

struct EmbeddingNorms {
  /// ||D^alpha u|| in L_{p,gamma}(E(A^{1-kappa-mu}))
  double lhs = 0.0;
  /// Sobolev-Lions norm
  double y = 0.0;
  /// ||u|| in L_{p,gamma}(E)
  double x = 0.0;
};

EmbeddingNorms embedding_norms(const GridFunction& u, const EmbeddingCase& c);

/// Rows (mu, h, lhs, rhs, ratio) with rhs = h^mu ||u||_Y + h^{-(1-mu)} ||u||_X.
/// The sweep is augmented with h* = ||u||_X / ||u||_Y when h* <= h0.
EstimateReport embedding_inequality_report(const GridFunction& u, const EmbeddingCase& c,
                                           std::span<const double> h_sweep);

/// Single row at h* = ||u||_X / ||u||_Y with
/// rhs = 2 ||u||_Y^{1-mu} ||u||_X^mu, the bracket of the additive estimate at h*.
/// Flagged when h* > h0.
EstimateReport multiplicative_estimate_report(const GridFunction& u, const EmbeddingCase& c);

/// Band-limited random function: Gaussian coefficients on wavenumbers with
/// |k_axis| < m/4, sampled exactly on any grid of the same extents.
struct BandLimitedFunction {
  std::vector<std::vector<std::int64_t>> modes;
  std::vector<Eigen::VectorXcd> coefficients;
  std::vector<double> extents;

  GridFunction sample(const Grid& grid, const ValueSpace& space) const;
};

BandLimitedFunction random_band_limited(const Grid& coarse, std::size_t components,
                                        std::uint64_t seed, std::uint64_t stream,
                                        double component_decay = 0.0);

}  // namespace mrlab
