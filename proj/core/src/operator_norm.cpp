#include "mrlab/operator_norm.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <complex>

namespace mrlab {

namespace {

using Complex = std::complex<double>;

bool is_diagonal(const Eigen::MatrixXcd& t) {
  for (Eigen::Index j = 0; j < t.cols(); ++j) {
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      if (i != j && t(i, j) != Complex(0.0)) return false;
    }
  }
  return true;
}

// psi_r(v) = |v|^{r-1} sgn(v) / ||v||_r^{r-1}, the unit dual vector of v in l_{r'}.
Eigen::VectorXcd dual_vector(const Eigen::VectorXcd& v, double r) {
  const double nv = lq_norm(v, r);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  if (nv == 0.0) return out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > 0.0) out[i] = std::pow(a / nv, r - 1.0) * (v[i] / a);
  }
  return out;
}

double boyd(const Eigen::MatrixXcd& t, double q, Eigen::VectorXcd x) {
  const double qd = q / (q - 1.0);
  x /= lq_norm(x, q);
  double est = lq_norm(t * x, q);
  for (int it = 0; it < 200; ++it) {
    const Eigen::VectorXcd y = t * x;
    if (lq_norm(y, q) == 0.0) break;
    const Eigen::VectorXcd z = t.adjoint() * dual_vector(y, q);
    if (lq_norm(z, qd) == 0.0) break;
    Eigen::VectorXcd next = dual_vector(z, qd);
    next /= lq_norm(next, q);
    const double val = lq_norm(t * next, q);
    x = next;
    if (val <= est * (1.0 + 1e-13)) {
      est = std::max(est, val);
      break;
    }
    est = val;
  }
  return est;
}

}  // namespace

double lq_norm(const Eigen::VectorXcd& v, double q) {
  if (std::isinf(q)) return v.cwiseAbs().maxCoeff();
  if (q == 2.0) return v.norm();
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), q);
  return std::pow(s, 1.0 / q);
}

double operator_norm(const Eigen::MatrixXcd& t, double q) {
  if (t.size() == 0) return 0.0;
  if (is_diagonal(t)) return t.diagonal().cwiseAbs().maxCoeff();
  if (q == 2.0) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
    return svd.singularValues()(0);
  }
  if (q == 1.0) return t.cwiseAbs().colwise().sum().maxCoeff();
  if (std::isinf(q)) return t.cwiseAbs().rowwise().sum().maxCoeff();

  double best = 0.0;
  Eigen::Index best_col = 0;
  for (Eigen::Index j = 0; j < t.cols(); ++j) {
    const double c = lq_norm(Eigen::VectorXcd(t.col(j)), q);
    if (c > best) {
      best = c;
      best_col = j;
    }
  }
  best = std::max(best, boyd(t, q, Eigen::VectorXcd::Ones(t.cols())));
  best = std::max(best, boyd(t, q, Eigen::VectorXcd::Unit(t.cols(), best_col)));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t, Eigen::ComputeThinV);
  best = std::max(best, boyd(t, q, svd.matrixV().col(0)));
  return best;
}

}  // namespace mrlab
