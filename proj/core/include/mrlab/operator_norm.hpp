#pragma once

#include <Eigen/Dense>

namespace mrlab {

/// Induced l_q -> l_q norm. Exact for q in {1, 2, inf} and for diagonal
/// matrices; otherwise Boyd's power iteration, which converges to a lower bound.
double operator_norm(const Eigen::MatrixXcd& t, double q);

double lq_norm(const Eigen::VectorXcd& v, double q);

}  // namespace mrlab
