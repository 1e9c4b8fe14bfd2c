#include "mrlab/principal_part.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mrlab/derivative.hpp"
#include "mrlab/errors.hpp"
#include "mrlab/report.hpp"

namespace mrlab {

PrincipalPart::PrincipalPart(int n, int l, std::vector<PrincipalTerm> terms)
    : n_(n), l_(l), terms_(std::move(terms)) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("principal part dimension must be 1..3");
  if (l < 1) throw std::invalid_argument("principal part order l must be >= 1");
  if (terms_.empty()) throw std::invalid_argument("principal part needs at least one term");
  for (const PrincipalTerm& t : terms_) {
    if (t.alpha.dim() != n) throw std::invalid_argument("principal term has the wrong dimension");
    if (t.alpha.total() != 2 * l) throw std::invalid_argument("principal terms must have |alpha| = 2l");
  }
}

PrincipalPart PrincipalPart::laplacian(int n, int l) {
  std::vector<PrincipalTerm> terms;
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  for (int k = 0; k < n; ++k) {
    std::vector<int> o(static_cast<std::size_t>(n), 0);
    o[static_cast<std::size_t>(k)] = 2 * l;
    terms.push_back({MultiIndex(o), Complex(sign)});
  }
  return PrincipalPart(n, l, std::move(terms));
}

Complex PrincipalPart::symbol(const Grid& grid, std::size_t flat) const {
  Complex k(0.0);
  for (const PrincipalTerm& t : terms_) k += t.coefficient * derivative_symbol(grid, t.alpha, flat);
  return k;
}

Complex PrincipalPart::symbol(std::span<const double> xi, unsigned nyquist) const {
  if (xi.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("frequency dimension mismatch");
  Complex k(0.0);
  for (const PrincipalTerm& t : terms_) {
    Complex s(1.0);
    for (int j = 0; j < n_; ++j) {
      if (t.alpha[j] % 2 == 1 && ((nyquist >> j) & 1u)) s = 0.0;
      if (t.alpha[j] > 0) s *= std::pow(Complex(0.0, xi[static_cast<std::size_t>(j)]), t.alpha[j]);
    }
    k += t.coefficient * s;
  }
  return k;
}

std::vector<Complex> PrincipalPart::lattice_symbol(const Grid& grid) const {
  if (grid.dim() != n_) throw std::invalid_argument("grid dimension does not match the principal part");
  std::vector<Complex> out(grid.point_count());
  for (std::size_t p = 0; p < grid.point_count(); ++p) out[p] = symbol(grid, p);
  return out;
}

EllipticityData check_ellipticity(const PrincipalPart& k, const Grid& grid) {
  bool any = false;
  for (const PrincipalTerm& t : k.terms()) any = any || t.coefficient != Complex(0.0);
  if (!any) {
    throw ConditionViolation("ellipticity", "all top-order coefficients vanish", {{"M0", "0"}});
  }
  const auto table = k.lattice_symbol(grid);
  EllipticityData out;
  out.m0 = std::numeric_limits<double>::infinity();
  std::array<double, kMaxDim> xi{};
  const std::span<double> xs(xi.data(), static_cast<std::size_t>(grid.dim()));
  for (std::size_t p = 0; p < grid.point_count(); ++p) {
    grid.frequency_of(p, xs);
    double denom = 0.0;
    for (double v : xs) denom += std::pow(v, 2 * k.order());
    if (denom == 0.0) continue;
    const Complex kv = table[p];
    out.m0 = std::min(out.m0, std::abs(kv) / denom);
    if (kv != Complex(0.0)) out.phi1 = std::max(out.phi1, std::abs(std::arg(kv)));
  }
  if (!(out.m0 > 1e-12)) {
    throw ConditionViolation("ellipticity", "M0 <= 0: symbol degenerates on the lattice",
                             {{"M0", format_double(out.m0)}, {"phi1", format_double(out.phi1)}});
  }
  if (out.phi1 >= std::numbers::pi - 1e-12) {
    throw ConditionViolation("ellipticity", "symbol leaves every sector S(phi1) with phi1 < pi",
                             {{"M0", format_double(out.m0)}, {"phi1", format_double(out.phi1)}});
  }
  return out;
}

}  // namespace mrlab
