#include "mrlab/sector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mrlab/operator_norm.hpp"

namespace mrlab {

Sector::Sector(double phi) : phi_(phi) {
  if (!(phi >= 0.0) || !(phi < std::numbers::pi)) throw std::invalid_argument("sector angle must lie in [0, pi)");
}

bool Sector::contains(Complex z) const {
  return z == Complex(0.0) || std::abs(std::arg(z)) <= phi_ + 1e-15;
}

std::vector<Complex> Sector::samples(int per_decade, int angles, double lo, double hi) const {
  if (per_decade < 1 || angles < 1 || !(lo > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("invalid sector sampling parameters");
  }
  const auto decades = std::log10(hi / lo);
  const int moduli = static_cast<int>(std::lround(decades * per_decade)) + 1;
  std::vector<Complex> out{Complex(0.0)};
  for (int i = 0; i < moduli; ++i) {
    const double r = lo * std::pow(10.0, decades * i / (moduli - 1));
    if (phi_ == 0.0 || angles == 1) {
      out.emplace_back(r, 0.0);
      continue;
    }
    for (int a = 0; a < angles; ++a) {
      const double theta = -phi_ + 2.0 * phi_ * a / (angles - 1);
      out.push_back(std::polar(r, theta));
    }
  }
  return out;
}

double positivity_bound(const PositiveOperator& a, double phi, int per_decade, int angles) {
  const Sector sector(phi);
  const bool orthogonal = a.is_diagonal() || a.space().q == 2.0;
  double best = 0.0;
  for (const Complex& z : sector.samples(per_decade, angles)) {
    double norm = 0.0;
    if (orthogonal) {
      for (Eigen::Index i = 0; i < a.spectrum().size(); ++i) {
        norm = std::max(norm, 1.0 / std::abs(a.spectrum()[i] + z));
      }
    } else {
      norm = operator_norm(a.resolvent(z), a.space().q);
    }
    best = std::max(best, (1.0 + std::abs(z)) * norm);
  }
  return best;
}

}  // namespace mrlab
