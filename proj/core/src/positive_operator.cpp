#include "mrlab/positive_operator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "mrlab/errors.hpp"
#include "mrlab/report.hpp"

namespace mrlab {

PositiveOperator::PositiveOperator(Variant variant, ValueSpace space, Eigen::VectorXd mu, Eigen::MatrixXd v)
    : variant_(variant), space_(space), mu_(std::move(mu)), v_(std::move(v)) {}

PositiveOperator PositiveOperator::lq_diagonal(double s, std::size_t n, double q) {
  if (!(s > 0.0)) throw std::invalid_argument("l_q^s operator needs s > 0");
  std::vector<double> entries(n);
  for (std::size_t i = 0; i < n; ++i) entries[i] = std::exp2(s * static_cast<double>(i + 1));
  return diagonal(std::move(entries), q);
}

PositiveOperator PositiveOperator::diagonal(std::vector<double> entries, double q) {
  ValueSpace space(entries.size(), q);
  Eigen::VectorXd mu(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i] > 0.0) || !std::isfinite(entries[i])) {
      throw std::invalid_argument("diagonal operator entries must be positive and finite");
    }
    if (i > 0 && entries[i] < entries[i - 1]) {
      throw std::invalid_argument("diagonal operator entries must be nondecreasing");
    }
    mu[static_cast<Eigen::Index>(i)] = entries[i];
  }
  const auto n = static_cast<Eigen::Index>(entries.size());
  return PositiveOperator(Variant::diagonal, space, std::move(mu), Eigen::MatrixXd::Identity(n, n));
}

PositiveOperator PositiveOperator::symmetric(const Eigen::MatrixXd& a, double q) {
  if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("operator matrix must be square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ConditionViolation("coupling-positivity", "coupling matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const double c0 = eig.eigenvalues().minCoeff();
  if (!(c0 > 0.0)) {
    throw ConditionViolation("coupling-positivity", "coupling matrix is not positive definite",
                             {{"C0", format_double(c0)}});
  }
  ValueSpace space(static_cast<std::size_t>(a.rows()), q);
  return PositiveOperator(Variant::symmetric, space, eig.eigenvalues(), eig.eigenvectors());
}

PositiveOperator PositiveOperator::identity(std::size_t n, double q) {
  return diagonal(std::vector<double>(n, 1.0), q);
}

Eigen::MatrixXd PositiveOperator::matrix() const {
  return function([](double m) { return m; });
}

Eigen::MatrixXd PositiveOperator::function(const std::function<double(double)>& f) const {
  Eigen::VectorXd fm = mu_.unaryExpr(f);
  if (is_diagonal()) return fm.asDiagonal();
  return v_ * fm.asDiagonal() * v_.transpose();
}

PositiveOperator PositiveOperator::frac_power(double theta) const {
  Eigen::VectorXd mu = mu_.array().pow(theta);
  return PositiveOperator(variant_, space_, std::move(mu), v_);
}

PositiveOperator PositiveOperator::with_exponent(double q) const {
  return PositiveOperator(variant_, ValueSpace(space_.dim, q), mu_, v_);
}

void PositiveOperator::to_eigenbasis(std::span<const Complex> v, std::span<Complex> c) const {
  const auto n = static_cast<Eigen::Index>(dim());
  Eigen::Map<const Eigen::VectorXcd> vin(v.data(), n);
  Eigen::Map<Eigen::VectorXcd> cout(c.data(), n);
  if (is_diagonal()) {
    cout = vin;
  } else {
    cout = v_.transpose().cast<Complex>() * vin;
  }
}

void PositiveOperator::from_eigenbasis(std::span<const Complex> c, std::span<Complex> v) const {
  const auto n = static_cast<Eigen::Index>(dim());
  Eigen::Map<const Eigen::VectorXcd> cin(c.data(), n);
  Eigen::Map<Eigen::VectorXcd> vout(v.data(), n);
  if (is_diagonal()) {
    vout = cin;
  } else {
    vout = v_.cast<Complex>() * cin;
  }
}

void PositiveOperator::apply(std::span<const Complex> v, std::span<Complex> out) const {
  apply_power(1.0, v, out);
}

void PositiveOperator::apply_power(double theta, std::span<const Complex> v, std::span<Complex> out) const {
  const auto n = static_cast<Eigen::Index>(dim());
  if (static_cast<Eigen::Index>(v.size()) != n || static_cast<Eigen::Index>(out.size()) != n) {
    throw std::invalid_argument("vector length does not match the operator");
  }
  if (theta == 0.0) {
    std::copy(v.begin(), v.end(), out.begin());
    return;
  }
  if (is_diagonal()) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double m = theta == 1.0 ? mu_[i] : std::pow(mu_[i], theta);
      out[static_cast<std::size_t>(i)] = m * v[static_cast<std::size_t>(i)];
    }
    return;
  }
  Eigen::Map<const Eigen::VectorXcd> vin(v.data(), n);
  Eigen::VectorXcd c = v_.transpose().cast<Complex>() * vin;
  for (Eigen::Index i = 0; i < n; ++i) c[i] *= theta == 1.0 ? mu_[i] : std::pow(mu_[i], theta);
  Eigen::Map<Eigen::VectorXcd>(out.data(), n) = v_.cast<Complex>() * c;
}

namespace {

Complex safe_inverse(double mu, Complex lambda) {
  const Complex d = mu + lambda;
  if (std::abs(d) <= 1e-14 * std::max(1.0, std::abs(mu))) {
    throw SingularityError("resolvent singular: lambda = " + format_double(lambda.real()) + "+" +
                           format_double(lambda.imag()) + "i is a negated eigenvalue");
  }
  return 1.0 / d;
}

}  // namespace

Eigen::VectorXcd PositiveOperator::resolvent_apply(Complex lambda, const Eigen::VectorXcd& v) const {
  if (v.size() != static_cast<Eigen::Index>(dim())) throw std::invalid_argument("vector length mismatch");
  Eigen::VectorXcd c = is_diagonal() ? v : Eigen::VectorXcd(v_.transpose().cast<Complex>() * v);
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] *= safe_inverse(mu_[i], lambda);
  if (is_diagonal()) return c;
  return v_.cast<Complex>() * c;
}

Eigen::MatrixXcd PositiveOperator::resolvent(Complex lambda) const {
  const auto n = static_cast<Eigen::Index>(dim());
  Eigen::VectorXcd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d[i] = safe_inverse(mu_[i], lambda);
  if (is_diagonal()) return d.asDiagonal();
  const Eigen::MatrixXcd v = v_.cast<Complex>();
  return v * d.asDiagonal() * v.transpose();
}

double ellipticity_constant(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

double ellipticity_constant(const PositiveOperator& a) { return a.spectrum().minCoeff(); }

double matrix_rpositivity_check(const PositiveOperator& a, std::span<const Complex> lambdas, double q) {
  const Eigen::MatrixXcd m = a.matrix().cast<Complex>();
  const auto n = m.rows();
  double best = 0.0;
  for (const Complex& lambda : lambdas) {
    Eigen::MatrixXcd shifted = m;
    shifted.diagonal().array() += lambda;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
    if (std::abs(lu.determinant()) <= 1e-300) {
      throw SingularityError("A + lambda is singular at lambda = " + format_double(lambda.real()) + "+" +
                             format_double(lambda.imag()) + "i");
    }
    const Eigen::MatrixXcd b = lu.solve(Eigen::MatrixXcd::Identity(n, n) * lambda);
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) row += std::pow(std::abs(b(i, j)), q);
      best = std::max(best, row);
    }
  }
  return best;
}

}  // namespace mrlab
