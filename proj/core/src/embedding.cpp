#include "mrlab/embedding.hpp"

#include <cmath>
#include <stdexcept>

#include "mrlab/derivative.hpp"
#include "mrlab/fourier.hpp"
#include "mrlab/multiplier.hpp"
#include "mrlab/norms.hpp"
#include "mrlab/rng.hpp"

namespace mrlab {

void EmbeddingCase::validate() const {
  if (l.dim() != alpha.dim()) throw std::invalid_argument("l and alpha differ in dimension");
  const double k = kappa();
  if (k > 1.0 + 1e-12) throw std::invalid_argument("embedding requires kappa = |alpha:l| <= 1");
  if (mu < -1e-12 || mu > 1.0 - k + 1e-12) throw std::invalid_argument("mu must lie in [0, 1 - kappa]");
  if (!(h > 0.0) || !(h0 > 0.0)) throw std::invalid_argument("h and h0 must be positive");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
}

OperatorSymbol psi_h_symbol(const EmbeddingCase& c) {
  c.validate();
  const double theta = 1.0 - c.kappa() - c.mu;
  const double hmu = std::pow(c.h, -c.mu);
  const double hinv = 1.0 / c.h;
  const MultiIndex alpha = c.alpha;
  const Anisotropy l = c.l;
  return OperatorSymbol::spectral(
      c.a,
      [=](const FrequencyPoint& p, double mu) {
        double xa = 1.0;
        double lsum = 0.0;
        for (int k = 0; k < alpha.dim(); ++k) {
          const double ax = std::abs(p.xi[static_cast<std::size_t>(k)]);
          if (alpha[k] > 0) xa *= std::pow(ax, alpha[k]);
          lsum += std::pow(ax, l.l[static_cast<std::size_t>(k)]);
        }
        return Complex(xa * std::pow(mu, theta) * hmu / (mu + lsum + hinv));
      },
      "psi-h");
}

double psi_h_lattice_sup(const EmbeddingCase& c, const Grid& grid) {
  return lattice_sup_norm(psi_h_symbol(c), grid, c.a.space());
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo) || count == 0) throw std::invalid_argument("invalid log-spaced range");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

EmbeddingNorms embedding_norms(const GridFunction& u, const EmbeddingCase& c) {
  c.validate();
  if (c.a.dim() != u.components()) throw std::invalid_argument("operator does not act on the function's value space");
  const Weight gamma = c.gamma.on(u.grid());
  EmbeddingNorms out;
  out.lhs = graph_lp_norm(spectral_derivative(u, c.alpha), c.a, 1.0 - c.kappa() - c.mu, c.p, gamma);
  out.y = sobolev_lions_norm(u, c.l, c.a, c.p, gamma);
  out.x = weighted_lp_norm(u, c.p, gamma);
  return out;
}

EstimateReport embedding_inequality_report(const GridFunction& u, const EmbeddingCase& c,
                                           std::span<const double> h_sweep) {
  EstimateReport report;
  report.name = "embedding";
  report.param_names = {"mu", "h"};
  const EmbeddingNorms norms = embedding_norms(u, c);
  if (norms.x == 0.0 || norms.y == 0.0) {
    report.skipped = 1;
    return report;
  }
  std::vector<double> hs(h_sweep.begin(), h_sweep.end());
  const double h_star = norms.x / norms.y;
  if (h_star <= c.h0) hs.push_back(h_star);
  for (double h : hs) {
    if (!(h > 0.0)) throw std::invalid_argument("h sweep values must be positive");
    const double rhs = std::pow(h, c.mu) * norms.y + std::pow(h, -(1.0 - c.mu)) * norms.x;
    report.add({c.mu, h}, norms.lhs, rhs);
  }
  return report;
}

EstimateReport multiplicative_estimate_report(const GridFunction& u, const EmbeddingCase& c) {
  EstimateReport report;
  report.name = "multiplicative";
  report.param_names = {"mu", "h"};
  const EmbeddingNorms norms = embedding_norms(u, c);
  if (norms.y == 0.0) throw std::invalid_argument("multiplicative estimate needs ||u||_Y > 0");
  const double h_star = norms.x / norms.y;
  const double rhs = 2.0 * std::pow(norms.y, 1.0 - c.mu) * std::pow(norms.x, c.mu);
  report.add({c.mu, h_star}, norms.lhs, rhs);
  if (h_star > c.h0) {
    report.flagged = true;
    report.note = "h* = ||u||_X/||u||_Y exceeds h0";
  }
  return report;
}

GridFunction BandLimitedFunction::sample(const Grid& grid, const ValueSpace& space) const {
  if (extents != grid.extents()) throw std::invalid_argument("band-limited function sampled on different extents");
  GridFunction u_hat(grid, space);
  const int n = grid.dim();
  std::array<std::size_t, kMaxDim> idx{};
  for (std::size_t i = 0; i < modes.size(); ++i) {
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
      const std::int64_t w = modes[i][static_cast<std::size_t>(k)];
      const auto m = static_cast<std::int64_t>(grid.size(k));
      if (2 * std::abs(w) >= m) throw std::invalid_argument("grid too coarse for the band-limited function");
      idx[static_cast<std::size_t>(k)] = static_cast<std::size_t>(w >= 0 ? w : w + m);
      // x_0 = -L shifts the phase of wavenumber w by (-1)^w.
      if (w % 2 != 0) sign = -sign;
    }
    const std::size_t p = grid.ravel(std::span<const std::size_t>(idx.data(), static_cast<std::size_t>(n)));
    for (std::size_t j = 0; j < space.dim; ++j) u_hat(p, j) = sign * coefficients[i][static_cast<Eigen::Index>(j)];
  }
  inverse_transform_inplace(u_hat);
  return u_hat;
}

BandLimitedFunction random_band_limited(const Grid& coarse, std::size_t components, std::uint64_t seed,
                                        std::uint64_t stream, double component_decay) {
  BandLimitedFunction f;
  f.extents = coarse.extents();
  auto gen = make_stream(seed, stream);
  const int n = coarse.dim();
  std::vector<std::int64_t> limit(static_cast<std::size_t>(n));
  std::size_t count = 1;
  for (int k = 0; k < n; ++k) {
    limit[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(coarse.size(k) / 4);
    count *= static_cast<std::size_t>(2 * limit[static_cast<std::size_t>(k)] - 1);
  }
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::int64_t> mode(static_cast<std::size_t>(n));
    std::size_t rest = c;
    for (int k = n - 1; k >= 0; --k) {
      const auto span = static_cast<std::size_t>(2 * limit[static_cast<std::size_t>(k)] - 1);
      mode[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(rest % span) - (limit[static_cast<std::size_t>(k)] - 1);
      rest /= span;
    }
    Eigen::VectorXcd coeff(static_cast<Eigen::Index>(components));
    for (std::size_t j = 0; j < components; ++j) {
      coeff[static_cast<Eigen::Index>(j)] = complex_normal(gen) * std::exp2(-component_decay * static_cast<double>(j));
    }
    f.modes.push_back(std::move(mode));
    f.coefficients.push_back(std::move(coeff));
  }
  return f;
}

}  // namespace mrlab
