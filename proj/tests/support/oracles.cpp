#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace mrlab::oracle {

namespace {

using Complex = std::complex<double>;

Eigen::MatrixXcd axis_derivative(const Grid& grid, int axis, int order) {
  const auto m = static_cast<Eigen::Index>(grid.size(axis));
  Eigen::MatrixXcd f(m, m);
  Eigen::MatrixXcd finv(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(m);
      f(k, j) = std::polar(1.0 / static_cast<double>(m), -angle);
      finv(j, k) = std::polar(1.0, angle);
    }
  }
  Eigen::VectorXcd sym(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::Index w = k < m / 2 ? k : k - m;
    const double xi = std::numbers::pi * static_cast<double>(w) / grid.extent(axis);
    if (k == m / 2 && order % 2 == 1) {
      sym[k] = 0.0;
    } else {
      sym[k] = std::pow(Complex(0.0, xi), order);
    }
  }
  return finv * sym.asDiagonal() * f;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd derivative_matrix(const Grid& grid, const MultiIndex& alpha) {
  Eigen::MatrixXcd d = axis_derivative(grid, 0, alpha[0]);
  for (int k = 1; k < grid.dim(); ++k) d = kron(d, axis_derivative(grid, k, alpha[k]));
  return d;
}

Eigen::MatrixXcd elliptic_matrix(const EllipticProblem& prob, const Grid& grid) {
  const auto p = static_cast<Eigen::Index>(grid.point_count());
  const auto n = static_cast<Eigen::Index>(prob.a.dim());
  const Eigen::MatrixXcd id_n = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(p * n, p * n);
  for (const PrincipalTerm& t : prob.principal.terms()) l += t.coefficient * kron(derivative_matrix(grid, t.alpha), id_n);
  const Eigen::MatrixXcd a = prob.a.matrix().cast<Complex>();
  for (Eigen::Index x = 0; x < p; ++x) l.block(x * n, x * n, n, n) += a + prob.lambda * id_n;
  for (const LowerOrderTerm& term : prob.lower) {
    const Eigen::MatrixXcd d = derivative_matrix(grid, term.alpha);
    for (Eigen::Index x = 0; x < p; ++x) {
      const Eigen::MatrixXcd& c = term.at(static_cast<std::size_t>(x));
      for (Eigen::Index y = 0; y < p; ++y) {
        if (d(x, y) != Complex(0.0)) l.block(x * n, y * n, n, n) += d(x, y) * c;
      }
    }
  }
  return l;
}

Eigen::VectorXcd flatten(const GridFunction& u) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(u.values().size()));
  for (std::size_t i = 0; i < u.values().size(); ++i) v[static_cast<Eigen::Index>(i)] = u.values()[i];
  return v;
}

GridFunction unflatten(const Eigen::VectorXcd& v, const Grid& grid, const ValueSpace& space) {
  return GridFunction(grid, space, std::vector<Complex>(v.data(), v.data() + v.size()));
}

GridFunction dense_elliptic_solve(const EllipticProblem& prob, const GridFunction& f) {
  const Eigen::MatrixXcd l = elliptic_matrix(prob, f.grid());
  const Eigen::VectorXcd u = l.partialPivLu().solve(flatten(f));
  return unflatten(u, f.grid(), f.space());
}

GridFunction implicit_euler(const ParabolicProblem& prob, const Grid& grid, const ValueSpace& space,
                            const Forcing& f, std::size_t steps) {
  EllipticProblem ep{prob.principal, prob.a, {}, 0.0};
  const Eigen::MatrixXcd l = elliptic_matrix(ep, grid);
  const double dt = prob.horizon / static_cast<double>(steps);
  const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(l.rows(), l.cols()) + dt * l;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(l.rows());
  for (std::size_t i = 1; i <= steps; ++i) {
    const double t = prob.horizon * static_cast<double>(i) / static_cast<double>(steps);
    const GridFunction fi = GridFunction::sample(grid, space, [&](std::span<const double> x, std::span<Complex> v) { f(t, x, v); });
    u = lu.solve(u + dt * flatten(fi));
  }
  return unflatten(u, grid, space);
}

Eigen::VectorXcd rk4(const Eigen::MatrixXcd& b, const std::function<Eigen::VectorXcd(double)>& g, double horizon,
                     std::size_t steps) {
  const double dt = horizon / static_cast<double>(steps);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(b.rows());
  auto rhs = [&](double t, const Eigen::VectorXcd& y) { return Eigen::VectorXcd(g(t) - b * y); };
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = dt * static_cast<double>(i);
    const Eigen::VectorXcd k1 = rhs(t, v);
    const Eigen::VectorXcd k2 = rhs(t + 0.5 * dt, v + 0.5 * dt * k1);
    const Eigen::VectorXcd k3 = rhs(t + 0.5 * dt, v + 0.5 * dt * k2);
    const Eigen::VectorXcd k4 = rhs(t + dt, v + dt * k3);
    v += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return v;
}

namespace {

double lq(const Eigen::VectorXcd& v, double q) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), q);
  return std::pow(s, 1.0 / q);
}

double ratio(const std::vector<Eigen::MatrixXcd>& family, const std::vector<Eigen::VectorXcd>& u, double q) {
  const std::size_t m = family.size();
  double lhs = 0.0;
  double rhs = 0.0;
  for (std::size_t s = 0; s < (std::size_t{1} << m); ++s) {
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(u[0].size());
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(u[0].size());
    for (std::size_t j = 0; j < m; ++j) {
      const double r = ((s >> j) & 1u) ? -1.0 : 1.0;
      a += r * family[j] * u[j];
      b += r * u[j];
    }
    lhs += lq(a, q);
    rhs += lq(b, q);
  }
  return rhs > 0.0 ? lhs / rhs : 0.0;
}

}  // namespace

double brute_force_rbound(const std::vector<Eigen::MatrixXcd>& family, double q, std::size_t draws, unsigned seed) {
  const auto n = family.front().rows();
  const std::size_t m = family.size();
  double best = 0.0;
  // Every assignment of coordinate vectors to the slots.
  std::size_t combos = 1;
  for (std::size_t j = 0; j < m; ++j) combos *= static_cast<std::size_t>(n);
  for (std::size_t c = 0; c < combos; ++c) {
    std::vector<Eigen::VectorXcd> u(m);
    std::size_t rest = c;
    for (std::size_t j = 0; j < m; ++j) {
      u[j] = Eigen::VectorXcd::Unit(n, static_cast<Eigen::Index>(rest % static_cast<std::size_t>(n)));
      rest /= static_cast<std::size_t>(n);
    }
    best = std::max(best, ratio(family, u, q));
  }
  // Single-slot tuples recover the largest operator norm (q = 2: top right singular vector).
  if (q == 2.0) {
    for (std::size_t j = 0; j < m; ++j) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(family[j], Eigen::ComputeFullV);
      std::vector<Eigen::VectorXcd> u(m, Eigen::VectorXcd::Zero(n));
      u[j] = svd.matrixV().col(0);
      best = std::max(best, ratio(family, u, q));
    }
  }
  std::mt19937 gen(seed);
  std::normal_distribution<double> normal;
  for (std::size_t d = 0; d < draws; ++d) {
    std::vector<Eigen::VectorXcd> u(m);
    for (auto& v : u) {
      v.resize(n);
      for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(normal(gen), normal(gen));
      v /= lq(v, q);
    }
    best = std::max(best, ratio(family, u, q));
  }
  return best;
}

double scalar_sup(const std::function<double(double)>& f, double lo, double hi, std::size_t samples) {
  double best = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(samples - 1));
    best = std::max(best, std::abs(f(x)));
  }
  return best;
}

double dyadic_a2_power(double a, double half_width, std::size_t m) {
  const double h = 2.0 * half_width / static_cast<double>(m);
  std::vector<double> w(m);
  for (std::size_t j = 0; j < m; ++j) w[j] = std::pow(std::abs(-half_width + (static_cast<double>(j) + 0.5) * h), a);
  double best = 0.0;
  for (std::size_t side = m; side >= 4; side /= 2) {
    for (std::size_t start = 0; start < m; start += side) {
      double s1 = 0.0;
      double s2 = 0.0;
      for (std::size_t j = start; j < start + side; ++j) {
        s1 += w[j];
        s2 += 1.0 / w[j];
      }
      best = std::max(best, (s1 / static_cast<double>(side)) * (s2 / static_cast<double>(side)));
    }
  }
  return best;
}

}  // namespace mrlab::oracle
