#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "mrlab/grid_function.hpp"

namespace mrlab {

/// Positive operator on a truncated l_q space, held in spectral form
/// A = V diag(mu) V^T with V orthogonal (the identity for diagonal operators).
class PositiveOperator {
 public:
  enum class Variant { diagonal, symmetric };

  /// diag(2^{s i}), i = 1..N.
  static PositiveOperator lq_diagonal(double s, std::size_t n, double q = 2.0);
  /// Strictly positive, nondecreasing entries.
  static PositiveOperator diagonal(std::vector<double> entries, double q = 2.0);
  /// Symmetric positive definite matrix; throws ConditionViolation("coupling-positivity") otherwise.
  static PositiveOperator symmetric(const Eigen::MatrixXd& a, double q = 2.0);
  static PositiveOperator identity(std::size_t n, double q = 2.0);

  Variant variant() const { return variant_; }
  bool is_diagonal() const { return variant_ == Variant::diagonal; }
  const ValueSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim; }
  /// Eigenvalues; for the diagonal variant these are the entries in order.
  const Eigen::VectorXd& spectrum() const { return mu_; }
  /// Orthogonal eigenvector matrix, columns matching spectrum().
  const Eigen::MatrixXd& basis() const { return v_; }

  Eigen::MatrixXd matrix() const;
  /// V diag(f(mu)) V^T
  Eigen::MatrixXd function(const std::function<double(double)>& f) const;

  PositiveOperator frac_power(double theta) const;
  /// Same operator regarded on l_q with a different exponent.
  PositiveOperator with_exponent(double q) const;

  void apply(std::span<const Complex> v, std::span<Complex> out) const;
  /// A^theta v without forming a new operator.
  void apply_power(double theta, std::span<const Complex> v, std::span<Complex> out) const;
  /// (A + lambda)^{-1} v; throws SingularityError when -lambda is an eigenvalue.
  Eigen::VectorXcd resolvent_apply(Complex lambda, const Eigen::VectorXcd& v) const;
  Eigen::MatrixXcd resolvent(Complex lambda) const;

  /// Coordinates in the eigenbasis, c = V^T v, and back.
  void to_eigenbasis(std::span<const Complex> v, std::span<Complex> c) const;
  void from_eigenbasis(std::span<const Complex> c, std::span<Complex> v) const;

 private:
  PositiveOperator(Variant variant, ValueSpace space, Eigen::VectorXd mu, Eigen::MatrixXd v);

  Variant variant_;
  ValueSpace space_;
  Eigen::VectorXd mu_;
  Eigen::MatrixXd v_;
};

/// Smallest eigenvalue of a symmetric matrix; the coupling is admissible iff it is positive.
double ellipticity_constant(const Eigen::MatrixXd& a);
double ellipticity_constant(const PositiveOperator& a);

/// max over samples k and rows i of sum_j |B(lambda_k)_ij|^q with
/// B(lambda) = lambda (A + lambda)^{-1} obtained by a linear solve.
double matrix_rpositivity_check(const PositiveOperator& a, std::span<const Complex> lambdas, double q);

}  // namespace mrlab
