#include "mrlab/mikhlin.hpp"

#include <cmath>
#include <stdexcept>

#include "mrlab/parallel.hpp"
#include "mrlab/report.hpp"

namespace mrlab {

std::vector<double> mikhlin_axis_nodes(const MikhlinOptions& options) {
  if (options.points_per_axis < 2) throw std::invalid_argument("Mikhlin grid needs at least two points per axis");
  const int count = options.points_per_axis;
  std::vector<double> positive;
  for (int i = 0; i < count; ++i) {
    const double e = -options.range_exponent + 2.0 * options.range_exponent * i / (count - 1);
    positive.push_back(std::exp2(e));
  }
  std::vector<double> nodes;
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) nodes.push_back(-*it);
  nodes.insert(nodes.end(), positive.begin(), positive.end());
  return nodes;
}

namespace {

std::string beta_label(const MultiIndex& beta) {
  std::string s = "beta=(";
  for (int k = 0; k < beta.dim(); ++k) s += (k ? "," : "") + std::to_string(beta[k]);
  return s + ")";
}

// xi^beta D^beta M(xi) by central differences with steps relative to |xi_k|.
Eigen::MatrixXcd mikhlin_term(const OperatorSymbol& m, std::span<const double> xi, const MultiIndex& beta,
                              std::size_t dim, const MikhlinOptions& options) {
  const int n = beta.dim();
  std::vector<int> axes;
  for (int k = 0; k < n; ++k) {
    if (beta[k] == 1) axes.push_back(k);
  }
  if (axes.empty()) return m.evaluate(FrequencyPoint{xi, 0}, dim);

  std::vector<double> step(static_cast<std::size_t>(n), 0.0);
  double denom = 1.0;
  for (int k : axes) {
    step[static_cast<std::size_t>(k)] = options.relative_step * std::abs(xi[static_cast<std::size_t>(k)]);
    denom *= 2.0 * step[static_cast<std::size_t>(k)];
  }
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  std::vector<double> shifted(xi.begin(), xi.end());
  const std::size_t combos = std::size_t{1} << axes.size();
  for (std::size_t c = 0; c < combos; ++c) {
    double sign = 1.0;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const auto k = static_cast<std::size_t>(axes[a]);
      const double s = ((c >> a) & 1u) ? -1.0 : 1.0;
      shifted[k] = xi[k] + s * step[k];
      sign *= s;
    }
    acc += sign * m.evaluate(FrequencyPoint{shifted, 0}, dim);
  }
  acc /= denom;

  double scale = 1.0;
  if (options.radial) {
    double r2 = 0.0;
    for (double v : xi) r2 += v * v;
    scale = std::pow(std::sqrt(r2), static_cast<double>(axes.size()));
  } else {
    for (int k : axes) scale *= xi[static_cast<std::size_t>(k)];
  }
  return acc * scale;
}

}  // namespace

MikhlinCertificate mikhlin_certificate(const OperatorSymbol& m, int n, const ValueSpace& space,
                                       const MikhlinOptions& options) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("Mikhlin certificate dimension must be 1..3");
  const auto nodes = mikhlin_axis_nodes(options);
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= nodes.size();

  MikhlinCertificate cert;
  const std::size_t betas = std::size_t{1} << n;
  for (std::size_t b = 0; b < betas; ++b) {
    std::vector<int> orders(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) orders[static_cast<std::size_t>(k)] = static_cast<int>((b >> (n - 1 - k)) & 1u);
    const MultiIndex beta(orders);

    std::vector<Eigen::MatrixXcd> family(total);
    parallel_for(total, [&](std::size_t begin, std::size_t end) {
      std::vector<double> xi(static_cast<std::size_t>(n));
      for (std::size_t i = begin; i < end; ++i) {
        std::size_t rest = i;
        for (int k = n - 1; k >= 0; --k) {
          xi[static_cast<std::size_t>(k)] = nodes[rest % nodes.size()];
          rest /= nodes.size();
        }
        family[i] = mikhlin_term(m, xi, beta, space.dim, options);
      }
    });

    MikhlinTerm term;
    term.beta = beta;
    for (const auto& t : family) {
      if (!t.allFinite() || t.cwiseAbs().maxCoeff() > options.overflow) {
        term.finite = false;
        break;
      }
    }
    if (!term.finite) {
      cert.bounded = false;
      if (cert.reason.empty()) cert.reason = beta_label(beta) + " exceeds the overflow threshold";
      term.estimate.family = beta_label(beta);
      term.estimate.family_size = total;
      term.estimate.bound = std::numeric_limits<double>::infinity();
    } else {
      RBoundOptions ro = options.rbound;
      ro.seed = options.rbound.seed + b;
      term.estimate = r_bound_estimate(family, space.q, ro, beta_label(beta));
    }
    cert.total += term.estimate.bound;
    cert.terms.push_back(std::move(term));
  }
  return cert;
}

MikhlinGrowth mikhlin_growth_check(const OperatorSymbol& m, int n, const ValueSpace& space,
                                   const MikhlinOptions& options, std::vector<double> range_exponents,
                                   double growth_tol) {
  if (range_exponents.size() < 2) throw std::invalid_argument("growth check needs at least two ranges");
  MikhlinGrowth out;
  out.range_exponents = range_exponents;
  const double per_octave = (options.points_per_axis - 1) / (2.0 * options.range_exponent);
  for (double r : range_exponents) {
    MikhlinOptions o = options;
    o.range_exponent = r;
    o.points_per_axis = static_cast<int>(std::lround(per_octave * 2.0 * r)) + 1;
    out.certificates.push_back(mikhlin_certificate(m, n, space, o));
    if (!out.certificates.back().bounded) out.bounded = false;
  }
  const double last = out.certificates.back().total;
  const double prev = out.certificates[out.certificates.size() - 2].total;
  if (last > growth_tol * prev) out.bounded = false;
  return out;
}

}  // namespace mrlab
