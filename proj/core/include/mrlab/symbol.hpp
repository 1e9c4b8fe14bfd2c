#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include "mrlab/positive_operator.hpp"

namespace mrlab {

/// Frequency together with the Nyquist mask of its lattice point (0 off-lattice).
struct FrequencyPoint {
  std::span<const double> xi;
  unsigned nyquist = 0;
};

/// Operator-valued function of the frequency.
///
/// Three representations are kept apart so application stays cheap: a scalar
/// times the identity, a scalar function of (xi, mu) acting diagonally in the
/// eigenbasis of a positive operator, and a dense N x N evaluator.
class OperatorSymbol {
 public:
  enum class Kind { scalar, spectral, dense };

  using ScalarFn = std::function<Complex(const FrequencyPoint&)>;
  using SpectralFn = std::function<Complex(const FrequencyPoint&, double mu)>;
  using DenseFn = std::function<Eigen::MatrixXcd(const FrequencyPoint&)>;

  static OperatorSymbol scalar(ScalarFn f, std::string name = "scalar");
  static OperatorSymbol spectral(const PositiveOperator& a, SpectralFn f,
                                 std::string name = "spectral");
  static OperatorSymbol dense(std::size_t dim, DenseFn f, std::string name = "dense");

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// Value-space dimension, 0 for scalar symbols that fit any dimension.
  std::size_t dim() const { return dim_; }
  const PositiveOperator* op() const { return op_.get(); }

  Eigen::MatrixXcd evaluate(const FrequencyPoint& p, std::size_t dim) const;
  Eigen::MatrixXcd evaluate(std::span<const double> xi, std::size_t dim) const {
    return evaluate(FrequencyPoint{xi, 0}, dim);
  }
  Complex evaluate_scalar(const FrequencyPoint& p) const;
  Complex evaluate_spectral(const FrequencyPoint& p, double mu) const;

  /// In-place v <- M(xi) v.
  void apply_at(const FrequencyPoint& p, std::span<Complex> v) const;

  /// Pointwise product M1(xi) M2(xi).
  friend OperatorSymbol compose(const OperatorSymbol& m1, const OperatorSymbol& m2);

 private:
  Kind kind_ = Kind::scalar;
  std::string name_;
  std::size_t dim_ = 0;
  std::shared_ptr<const PositiveOperator> op_;
  ScalarFn scalar_;
  SpectralFn spectral_;
  DenseFn dense_;
};

OperatorSymbol compose(const OperatorSymbol& m1, const OperatorSymbol& m2);

namespace symbols {

OperatorSymbol identity();
/// -i sign(xi_axis); zero on the zero and Nyquist bins.
OperatorSymbol hilbert(int axis = 0);
/// xi_axis / (1 + |xi|)
OperatorSymbol riesz_like(int axis = 0);
/// (i xi)^alpha with the derivative Nyquist convention.
OperatorSymbol power(const MultiIndex& alpha);
/// log|xi|, defined as 0 at xi = 0.
OperatorSymbol log_modulus();
/// c (A + sum_k c_k |xi_k|^{w_k} + lambda)^{-1}
OperatorSymbol resolvent(const PositiveOperator& a, Complex lambda,
                         std::vector<double> coefficients = {}, std::vector<int> orders = {});

}  // namespace symbols

}  // namespace mrlab
