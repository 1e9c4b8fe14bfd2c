#include "mrlab/symbol.hpp"

#include <cmath>
#include <stdexcept>

#include "mrlab/errors.hpp"
#include "mrlab/report.hpp"

namespace mrlab {

OperatorSymbol OperatorSymbol::scalar(ScalarFn f, std::string name) {
  OperatorSymbol s;
  s.kind_ = Kind::scalar;
  s.name_ = std::move(name);
  s.scalar_ = std::move(f);
  return s;
}

OperatorSymbol OperatorSymbol::spectral(const PositiveOperator& a, SpectralFn f, std::string name) {
  OperatorSymbol s;
  s.kind_ = Kind::spectral;
  s.name_ = std::move(name);
  s.dim_ = a.dim();
  s.op_ = std::make_shared<const PositiveOperator>(a);
  s.spectral_ = std::move(f);
  return s;
}

OperatorSymbol OperatorSymbol::dense(std::size_t dim, DenseFn f, std::string name) {
  OperatorSymbol s;
  s.kind_ = Kind::dense;
  s.name_ = std::move(name);
  s.dim_ = dim;
  s.dense_ = std::move(f);
  return s;
}

Complex OperatorSymbol::evaluate_scalar(const FrequencyPoint& p) const {
  if (kind_ != Kind::scalar) throw std::logic_error("symbol is not scalar");
  return scalar_(p);
}

Complex OperatorSymbol::evaluate_spectral(const FrequencyPoint& p, double mu) const {
  if (kind_ == Kind::scalar) return scalar_(p);
  if (kind_ != Kind::spectral) throw std::logic_error("symbol has no spectral form");
  return spectral_(p, mu);
}

Eigen::MatrixXcd OperatorSymbol::evaluate(const FrequencyPoint& p, std::size_t dim) const {
  if (dim_ != 0 && dim != dim_) throw std::invalid_argument("symbol evaluated on a value space of the wrong dimension");
  const auto n = static_cast<Eigen::Index>(dim);
  switch (kind_) {
    case Kind::scalar:
      return Eigen::MatrixXcd::Identity(n, n) * scalar_(p);
    case Kind::spectral: {
      Eigen::VectorXcd d(n);
      for (Eigen::Index i = 0; i < n; ++i) d[i] = spectral_(p, op_->spectrum()[i]);
      if (op_->is_diagonal()) return d.asDiagonal();
      const Eigen::MatrixXcd v = op_->basis().cast<Complex>();
      return v * d.asDiagonal() * v.transpose();
    }
    case Kind::dense:
      return dense_(p);
  }
  return {};
}

void OperatorSymbol::apply_at(const FrequencyPoint& p, std::span<Complex> v) const {
  switch (kind_) {
    case Kind::scalar: {
      const Complex s = scalar_(p);
      for (Complex& z : v) z *= s;
      return;
    }
    case Kind::spectral: {
      if (op_->is_diagonal()) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= spectral_(p, op_->spectrum()[static_cast<Eigen::Index>(i)]);
        return;
      }
      std::vector<Complex> c(v.size());
      op_->to_eigenbasis(v, c);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] *= spectral_(p, op_->spectrum()[static_cast<Eigen::Index>(i)]);
      op_->from_eigenbasis(c, v);
      return;
    }
    case Kind::dense: {
      const auto n = static_cast<Eigen::Index>(v.size());
      Eigen::Map<Eigen::VectorXcd> vm(v.data(), n);
      const Eigen::VectorXcd r = dense_(p) * vm;
      vm = r;
      return;
    }
  }
}

namespace {

bool same_operator(const PositiveOperator& a, const PositiveOperator& b) {
  return a.variant() == b.variant() && a.spectrum() == b.spectrum() && a.basis() == b.basis();
}

}  // namespace

OperatorSymbol compose(const OperatorSymbol& m1, const OperatorSymbol& m2) {
  using Kind = OperatorSymbol::Kind;
  const std::string name = m1.name() + "*" + m2.name();
  if (m1.kind() == Kind::scalar && m2.kind() == Kind::scalar) {
    return OperatorSymbol::scalar(
        [m1, m2](const FrequencyPoint& p) { return m1.evaluate_scalar(p) * m2.evaluate_scalar(p); }, name);
  }
  const bool spectral1 = m1.kind() != Kind::dense;
  const bool spectral2 = m2.kind() != Kind::dense;
  if (spectral1 && spectral2) {
    const PositiveOperator* op = m1.op() ? m1.op() : m2.op();
    if (!m1.op() || !m2.op() || same_operator(*m1.op(), *m2.op())) {
      return OperatorSymbol::spectral(
          *op,
          [m1, m2](const FrequencyPoint& p, double mu) {
            return m1.evaluate_spectral(p, mu) * m2.evaluate_spectral(p, mu);
          },
          name);
    }
  }
  const std::size_t dim = m1.dim() ? m1.dim() : m2.dim();
  if (dim == 0) throw std::logic_error("cannot compose symbols of unknown dimension");
  if (m1.dim() && m2.dim() && m1.dim() != m2.dim()) throw std::invalid_argument("composed symbols differ in dimension");
  return OperatorSymbol::dense(
      dim, [m1, m2, dim](const FrequencyPoint& p) { return Eigen::MatrixXcd(m1.evaluate(p, dim) * m2.evaluate(p, dim)); },
      name);
}

namespace symbols {

namespace {

double euclidean(std::span<const double> xi) {
  double s = 0.0;
  for (double v : xi) s += v * v;
  return std::sqrt(s);
}

void require_axis(const FrequencyPoint& p, int axis) {
  if (axis < 0 || static_cast<std::size_t>(axis) >= p.xi.size()) throw std::invalid_argument("symbol axis out of range");
}

}  // namespace

OperatorSymbol identity() {
  return OperatorSymbol::scalar([](const FrequencyPoint&) { return Complex(1.0); }, "identity");
}

OperatorSymbol hilbert(int axis) {
  return OperatorSymbol::scalar(
      [axis](const FrequencyPoint& p) {
        require_axis(p, axis);
        const double x = p.xi[static_cast<std::size_t>(axis)];
        if (x == 0.0 || (p.nyquist >> axis) & 1u) return Complex(0.0);
        return Complex(0.0, x > 0.0 ? -1.0 : 1.0);
      },
      "hilbert");
}

OperatorSymbol riesz_like(int axis) {
  return OperatorSymbol::scalar(
      [axis](const FrequencyPoint& p) {
        require_axis(p, axis);
        return Complex(p.xi[static_cast<std::size_t>(axis)] / (1.0 + euclidean(p.xi)));
      },
      "riesz-like");
}

OperatorSymbol power(const MultiIndex& alpha) {
  return OperatorSymbol::scalar(
      [alpha](const FrequencyPoint& p) {
        if (static_cast<std::size_t>(alpha.dim()) != p.xi.size()) throw std::invalid_argument("power symbol dimension mismatch");
        Complex s(1.0);
        for (int k = 0; k < alpha.dim(); ++k) {
          const int a = alpha[k];
          if (a == 0) continue;
          if (a % 2 == 1 && ((p.nyquist >> k) & 1u)) return Complex(0.0);
          s *= std::pow(Complex(0.0, p.xi[static_cast<std::size_t>(k)]), a);
        }
        return s;
      },
      "power");
}

OperatorSymbol log_modulus() {
  return OperatorSymbol::scalar(
      [](const FrequencyPoint& p) {
        const double r = euclidean(p.xi);
        return Complex(r > 0.0 ? std::log(r) : 0.0);
      },
      "log-modulus");
}

OperatorSymbol resolvent(const PositiveOperator& a, Complex lambda, std::vector<double> coefficients,
                         std::vector<int> orders) {
  if (coefficients.size() != orders.size()) throw std::invalid_argument("resolvent coefficients and orders differ in length");
  return OperatorSymbol::spectral(
      a,
      [lambda, coefficients, orders](const FrequencyPoint& p, double mu) {
        if (!coefficients.empty() && coefficients.size() != p.xi.size()) {
          throw std::invalid_argument("resolvent coefficients do not match the dimension");
        }
        double k = 0.0;
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
          k += coefficients[i] * std::pow(std::abs(p.xi[i]), orders[i]);
        }
        const Complex d = mu + k + lambda;
        if (std::abs(d) <= 1e-14 * std::max(1.0, mu + k)) {
          std::string where;
          for (double x : p.xi) where += (where.empty() ? "" : ",") + format_double(x);
          throw SingularityError("resolvent symbol singular at xi=(" + where + ")");
        }
        return 1.0 / d;
      },
      "resolvent");
}

}  // namespace symbols

}  // namespace mrlab
