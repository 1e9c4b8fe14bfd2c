#pragma once

#include "mrlab/grid_function.hpp"

namespace mrlab {

// Discrete Fourier transform on the grid lattice, applied componentwise.
// The forward transform carries the 1/prod(m_k) factor, the inverse is
// unnormalized, so a constant c maps to c in the zero-frequency bin.

GridFunction forward_transform(const GridFunction& u);
GridFunction inverse_transform(const GridFunction& u_hat);

void forward_transform_inplace(GridFunction& u);
void inverse_transform_inplace(GridFunction& u_hat);

/// Frequency-side l_2 norm that matches the unweighted L_2 norm by Parseval:
/// (|Omega| * sum_xi ||u_hat(xi)||_2^2)^{1/2}.
double parseval_norm(const GridFunction& u_hat);

}  // namespace mrlab
