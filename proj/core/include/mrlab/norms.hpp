#pragma once

#include <span>

#include "mrlab/grid_function.hpp"
#include "mrlab/weight.hpp"

namespace mrlab {

class PositiveOperator;

double lq_norm(std::span<const Complex> v, double q);

/// (sum_x ||u(x)||_{l_q}^p gamma(x) |cell|)^{1/p}
double weighted_lp_norm(const GridFunction& u, double p, const Weight& gamma);
double lp_norm(const GridFunction& u, double p);

/// Weighted L_p norm with values measured in the graph norm of A^theta,
/// ||v||_{E(A^theta)} = (||v||^p + ||A^theta v||^p)^{1/p}.
double graph_lp_norm(const GridFunction& u, const PositiveOperator& a, double theta,
                     double p, const Weight& gamma);

/// ||u||_{L_{p,gamma}(E(A))} + sum_k ||d^{l_k} u / dx_k^{l_k}||_{L_{p,gamma}(E)}
double sobolev_lions_norm(const GridFunction& u, const Anisotropy& l, const PositiveOperator& a,
                          double p, const Weight& gamma);

/// Time quadrature weights for snapshots on a uniform grid: trapezoid for two or
/// more snapshots, a single cell of width dt for one snapshot.
std::vector<double> time_weights(std::size_t snapshots, double dt);

/// (int (int ||f||^p gamma dx)^{p1/p} dt)^{1/p1}
double mixed_norm(std::span<const GridFunction> snapshots, double p, double p1,
                  const Weight& gamma, double dt);

/// Same outer rule applied to precomputed spatial norms ||f(t_i)||_{L_{p,gamma}}.
double mixed_norm_from_spatial(std::span<const double> spatial_norms, double p1, double dt);

}  // namespace mrlab
