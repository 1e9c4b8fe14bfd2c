#pragma once

#include "mrlab/grid_function.hpp"

namespace mrlab {

/// Discrete multiplier (i xi_1)^{a_1} ... (i xi_n)^{a_n} at a lattice index.
/// Odd orders on a Nyquist axis give zero so real data stays real.
Complex derivative_symbol(const Grid& grid, const MultiIndex& alpha, std::size_t flat);

/// D^alpha u = F^{-1} (i xi)^alpha F u.
GridFunction spectral_derivative(const GridFunction& u, const MultiIndex& alpha);

/// Applies the derivative multiplier to a function already on the frequency side.
void multiply_derivative_symbol(GridFunction& u_hat, const MultiIndex& alpha);

}  // namespace mrlab
