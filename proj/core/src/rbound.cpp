#include "mrlab/rbound.hpp"

#include <cmath>
#include <stdexcept>

#include "mrlab/operator_norm.hpp"
#include "mrlab/parallel.hpp"
#include "mrlab/rng.hpp"

namespace mrlab {

const char* to_string(RBoundMethod method) {
  return method == RBoundMethod::exhaustive ? "exhaustive" : "monte-carlo";
}

namespace {

Eigen::MatrixXd sign_patterns(std::size_t m, const RBoundOptions& options, RBoundMethod& method) {
  if (m <= options.exhaustive_limit) {
    method = RBoundMethod::exhaustive;
    // The first sign is fixed to +1: flipping every sign leaves both norms unchanged.
    const std::size_t rows = std::size_t{1} << (m - 1);
    Eigen::MatrixXd s(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(m));
    for (std::size_t r = 0; r < rows; ++r) {
      s(static_cast<Eigen::Index>(r), 0) = 1.0;
      for (std::size_t j = 1; j < m; ++j) {
        s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = ((r >> (j - 1)) & 1u) ? -1.0 : 1.0;
      }
    }
    return s;
  }
  method = RBoundMethod::monte_carlo;
  auto gen = make_stream(options.seed, 0);
  Eigen::MatrixXd s(static_cast<Eigen::Index>(options.sign_trials), static_cast<Eigen::Index>(m));
  for (Eigen::Index r = 0; r < s.rows(); ++r) {
    for (Eigen::Index j = 0; j < s.cols(); j += 64) {
      const std::uint64_t bits = gen();
      for (Eigen::Index b = 0; b < 64 && j + b < s.cols(); ++b) s(r, j + b) = ((bits >> b) & 1u) ? -1.0 : 1.0;
    }
  }
  return s;
}

double mean_column_norm(const Eigen::MatrixXcd& y, double q) {
  double s = 0.0;
  for (Eigen::Index c = 0; c < y.cols(); ++c) s += lq_norm(Eigen::VectorXcd(y.col(c)), q);
  return s / static_cast<double>(y.cols());
}

}  // namespace

RBoundEstimate r_bound_estimate(std::span<const Eigen::MatrixXcd> family, double q,
                                const RBoundOptions& options, std::string description) {
  if (family.empty()) throw std::invalid_argument("R-bound estimate needs a nonempty family");
  const auto n = family.front().rows();
  for (const auto& t : family) {
    if (t.rows() != n || t.cols() != n) throw std::invalid_argument("family members act on different spaces");
  }
  const std::size_t m = family.size();
  const auto nn = static_cast<std::size_t>(n);

  RBoundEstimate est;
  est.family = std::move(description);
  est.family_size = m;

  double floor = 0.0;
  for (const auto& t : family) floor = std::max(floor, operator_norm(t, q));

  const Eigen::MatrixXd signs = sign_patterns(m, options, est.method);
  const Eigen::MatrixXcd signs_t = signs.transpose().cast<std::complex<double>>();

  const double per_tuple = static_cast<double>(signs.rows()) * static_cast<double>(m) * static_cast<double>(nn);
  const double affordable = std::max(1.0, std::floor(options.work_budget / per_tuple));
  const std::size_t total = std::min<std::size_t>(2 * nn + options.vector_draws,
                                                  static_cast<std::size_t>(affordable));

  auto ratio_for = [&](std::size_t d) {
    Eigen::MatrixXcd u(n, static_cast<Eigen::Index>(m));
    if (d < 2 * nn) {
      u.setZero();
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t i = d < nn ? d : (d - nn + j) % nn;
        u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
      }
    } else {
      auto gen = make_stream(options.seed, d + 1);
      for (Eigen::Index j = 0; j < u.cols(); ++j) {
        for (Eigen::Index i = 0; i < n; ++i) u(i, j) = complex_normal(gen);
        u.col(j) /= lq_norm(Eigen::VectorXcd(u.col(j)), q);
      }
    }
    Eigen::MatrixXcd tu(n, static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j) tu.col(static_cast<Eigen::Index>(j)) = family[j] * u.col(static_cast<Eigen::Index>(j));
    const double rhs = mean_column_norm(u * signs_t, q);
    const double lhs = mean_column_norm(tu * signs_t, q);
    return rhs > 0.0 ? lhs / rhs : 0.0;
  };

  est.sample_count = total;
  est.bound = std::max(floor, parallel_max(total, ratio_for));
  return est;
}

}  // namespace mrlab
