#pragma once

#include <span>

#include "mrlab/symbol.hpp"

namespace mrlab {

/// F^{-1} M(xi) F u.
GridFunction apply_symbol(const OperatorSymbol& m, const GridFunction& u);
/// Multiplies a frequency-side function in place.
void apply_symbol_spectral(const OperatorSymbol& m, GridFunction& u_hat);

/// max over the lattice of ||M(xi)||_{l_q -> l_q}.
double lattice_sup_norm(const OperatorSymbol& m, const Grid& grid, const ValueSpace& space);

/// F^{-1} chi_{(0, inf)^n} F u, as the product of the n half-line projections.
GridFunction riesz_projection(const GridFunction& u);
/// Projection onto frequencies with xi_axis > 0 (Nyquist excluded).
GridFunction half_line_projection(const GridFunction& u, int axis);

/// F^{-1} chi_Q F u for the open box Q = prod (a_k, b_k).
GridFunction char_projection(std::span<const double> a, std::span<const double> b,
                             const GridFunction& u);
/// F^{-1} chi_{prod (a_k, inf)} F u
GridFunction lower_cut_projection(std::span<const double> a, const GridFunction& u);
/// F^{-1} chi_{prod (-inf, b_k)} F u
GridFunction upper_cut_projection(std::span<const double> b, const GridFunction& u);

}  // namespace mrlab
