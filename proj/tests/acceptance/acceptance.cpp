// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: mrlab_acceptance [c01 c02 ...]; no arguments runs everything.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "driver/config.hpp"
#include "driver/experiments.hpp"
#include "mrlab/ap_weight.hpp"
#include "mrlab/degenerate.hpp"
#include "mrlab/derivative.hpp"
#include "mrlab/elliptic.hpp"
#include "mrlab/embedding.hpp"
#include "mrlab/errors.hpp"
#include "mrlab/fourier.hpp"
#include "mrlab/norms.hpp"
#include "mrlab/parabolic.hpp"
#include "mrlab/report.hpp"
#include "mrlab/system.hpp"
#include "oracles.hpp"

namespace mrlab {
namespace {

const double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Detail {
 public:
  template <class T>
  Detail& operator<<(const T& v) {
    out_ << v;
    return *this;
  }
  Detail& num(double v) {
    out_ << format_double(v);
    return *this;
  }
  Detail& check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      out_ << "[FAILED " << what << "] ";
    }
    return *this;
  }
  Outcome done() const { return {pass_, out_.str()}; }

 private:
  std::ostringstream out_;
  bool pass_ = true;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double relative_l2(const GridFunction& a, const GridFunction& b) { return lp_norm(a - b, 2.0) / lp_norm(b, 2.0); }

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

std::string fix(double v, int digits = 3) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << v;
  return s.str();
}

// 1. Transform core
Outcome transform_core() {
  Detail d;
  const auto t0 = std::chrono::steady_clock::now();
  const Grid g({kPi}, {256});
  std::mt19937_64 gen(1);
  std::normal_distribution<double> normal;
  GridFunction u(g, ValueSpace(3, 2.0));
  for (auto& v : u.values()) v = Complex(normal(gen), normal(gen));

  const GridFunction u_hat = forward_transform(u);
  const double round_trip = relative_l2(inverse_transform(u_hat), u);
  double s_hat = 0.0, s = 0.0;
  for (const auto& v : u_hat.values()) s_hat += std::norm(v);
  for (const auto& v : u.values()) s += std::norm(v);
  const double parseval = std::abs(s_hat * 256.0 - s) / s;

  const auto sine = GridFunction::sample(g, ValueSpace(1, 2.0), [](std::span<const double> x, std::span<Complex> v) {
    v[0] = std::sin(x[0]);
  });
  const GridFunction ds = spectral_derivative(sine, MultiIndex({1}));
  double derr = 0.0;
  for (std::size_t j = 0; j < g.point_count(); ++j) derr = std::max(derr, std::abs(ds(j, 0) - std::cos(g.coordinate(0, j))));
  const double elapsed = seconds_since(t0);

  d << "round-trip " << sci(round_trip) << ", Parseval " << sci(parseval) << ", d/dx sin error " << sci(derr)
    << ", " << fix(elapsed) << " s ";
  d.check(round_trip <= 1e-10, "round-trip").check(parseval <= 1e-9, "Parseval").check(derr <= 1e-9, "derivative");
  d.check(elapsed < 1.0, "runtime");
  return d.done();
}

// 2. A_p detector on |x|^a, n = 1, p = 2
Outcome ap_detector() {
  Detail d;
  const auto t0 = std::chrono::steady_clock::now();
  const Grid coarse({1.0}, {64});
  for (double a : {-0.5, 0.0, 0.5, 1.1, 1.5}) {
    const auto ladder = ap_refinement_ladder(
        [a](const Grid& g) { return a == 0.0 ? Weight::constant(g) : Weight::power(g, {a}); }, coarse, 2.0, 5);
    const ApVerdict v = classify_ladder(ladder);
    bool increasing = true;
    for (std::size_t i = 1; i < ladder.size(); ++i) increasing = increasing && ladder[i].constant > ladder[i - 1].constant;
    d << "a=" << fix(a, 1) << ": " << fix(ladder.front().constant, 4) << " -> " << fix(ladder.back().constant, 4) << "; ";
    if (std::abs(a) < 1.0) {
      d.check(v == ApVerdict::stable, "stable a=" + fix(a, 1));
    } else {
      d.check(v == ApVerdict::growing && increasing && ladder.size() >= 4, "growing a=" + fix(a, 1));
    }
    if (a == 0.5) {
      const double oracle = oracle::dyadic_a2_power(0.5, 1.0, ladder.back().points);
      d.check(std::abs(oracle - ladder.back().constant) <= 1e-12 * oracle, "oracle agreement");
    }
  }
  const double elapsed = seconds_since(t0);
  d << fix(elapsed) << " s ";
  d.check(elapsed < 5.0, "runtime");
  return d.done();
}

struct SymbolCase {
  std::string name;
  Grid grid;
  std::vector<int> l;
  std::vector<int> alpha;
};

std::vector<SymbolCase> symbol_cases() {
  return {
      {"n=1 l=(2) alpha=(1)", Grid({kPi}, {256}), {2}, {1}},
      {"n=2 l=(2,2) alpha=(1,0)", Grid({kPi, kPi}, {128, 128}), {2, 2}, {1, 0}},
      {"n=2 l=(2,4) alpha=(1,1)", Grid({kPi, kPi}, {128, 128}), {2, 4}, {1, 1}},
  };
}

// 3. Uniform bound of Psi_h over h
Outcome psi_uniform_bound() {
  Detail d;
  const auto t0 = std::chrono::steady_clock::now();
  const auto hs = log_spaced(1e-3, 1.0, 10);
  Eigen::MatrixXd m(2, 2);
  m << 2, 1, 1, 2;
  const std::vector<std::pair<std::string, PositiveOperator>> ops{
      {"diagonal s=1 N=16", PositiveOperator::lq_diagonal(1.0, 16)}, {"matrix [[2,1],[1,2]]", PositiveOperator::symmetric(m)}};
  for (const auto& [op_name, op] : ops) {
    double worst = 0.0;
    std::string where;
    for (const auto& sc : symbol_cases()) {
      EmbeddingCase c{Anisotropy(sc.l), MultiIndex(sc.alpha), 0.0, 1.0, 1.0, op, 2.0, {}};
      const double top = 1.0 - c.kappa();
      for (double mu : {0.0, 0.5 * top, top}) {
        c.mu = mu;
        double lo = INFINITY, hi = 0.0;
        for (double h : hs) {
          c.h = h;
          const double s = psi_h_lattice_sup(c, sc.grid);
          lo = std::min(lo, s);
          hi = std::max(hi, s);
        }
        const double spread = hi / lo;
        if (!(spread <= 3.0)) d << op_name << ", " << sc.name << ", mu=" << fix(mu) << ": spread " << fix(spread, 2) << "; ";
        if (spread > worst) {
          worst = spread;
          where = sc.name + ", mu=" + fix(mu);
        }
      }
    }
    d << op_name << " worst spread " << fix(worst, 2) << " (" << where << "); ";
    d.check(worst <= 3.0, op_name);
  }
  const double elapsed = seconds_since(t0);
  d << fix(elapsed) << " s ";
  d.check(elapsed < 30.0, "runtime");
  return d.done();
}

// 4. Embedding constant under refinement, multiplicative estimate
Outcome embedding_constant() {
  Detail d;
  struct Case {
    std::string name;
    std::vector<double> extents;
    std::vector<int> l;
    std::vector<int> alpha;
  };
  const std::vector<Case> cases{{"n=1 l=(2) alpha=(1)", {kPi}, {2}, {1}},
                                {"n=2 l=(2,4) alpha=(1,1)", {kPi, kPi}, {2, 4}, {1, 1}}};
  const auto hs = log_spaced(1e-3, 1.0, 10);
  const std::size_t corpus_size = 32;
  for (const auto& cs : cases) {
    const std::size_t n = cs.extents.size();
    const Grid coarse(cs.extents, std::vector<std::size_t>(n, 64));
    const Grid fine(cs.extents, std::vector<std::size_t>(n, 128));
    const ValueSpace space(4, 2.0);
    std::vector<BandLimitedFunction> corpus;
    for (std::size_t i = 0; i < corpus_size; ++i) corpus.push_back(random_band_limited(coarse, 4, 2024, 100 + i));
    EmbeddingCase c{Anisotropy(cs.l), MultiIndex(cs.alpha), 0.0, 1.0, 1.0, PositiveOperator::lq_diagonal(1.0, 4), 2.0, {}};
    const double top = 1.0 - c.kappa();
    for (double mu : {0.0, 0.5 * top, top}) {
      c.mu = mu;
      double c_coarse = 0.0, c_fine = 0.0, mult_excess = -INFINITY;
      for (const auto& f : corpus) {
        const GridFunction uc = f.sample(coarse, space);
        const GridFunction uf = f.sample(fine, space);
        c_coarse = std::max(c_coarse, embedding_inequality_report(uc, c, hs).max_ratio);
        const double sweep = embedding_inequality_report(uf, c, hs).max_ratio;
        c_fine = std::max(c_fine, sweep);
        const double mult = multiplicative_estimate_report(uf, c).max_ratio;
        mult_excess = std::max(mult_excess, mult - sweep);
      }
      const double change = std::max(c_coarse, c_fine) / std::min(c_coarse, c_fine);
      d << cs.name << " mu=" << fix(mu) << ": C=" << fix(c_coarse, 4) << "/" << fix(c_fine, 4) << " mult-sweep "
        << sci(mult_excess) << "; ";
      d.check(std::isfinite(c_coarse) && std::isfinite(c_fine) && c_fine > 0.0, "finite C_mu");
      d.check(change <= 1.5, "refinement change");
      d.check(mult_excess <= 1e-9, "multiplicative");
    }
  }
  return d.done();
}

// 5. Elliptic solver, single modes, coercivity
Outcome elliptic_coercive() {
  Detail d;
  const Grid g({kPi, kPi}, {16, 16});
  const auto a = PositiveOperator::lq_diagonal(1.0, 16);
  // Laplacian-type part rotated by pi/4 so that arg lambda = +-phi1/2 differ from 0.
  const Complex rot = std::polar(1.0, kPi / 4.0);
  const PrincipalPart k(2, 1, {{MultiIndex({2, 0}), -rot}, {MultiIndex({0, 2}), -rot}});
  const EllipticityData ell = check_ellipticity(k, g);
  d << "phi1=" << fix(ell.phi1, 4) << "; ";

  std::vector<Complex> lambdas;
  for (double r : {1.0, 10.0, 100.0, 1000.0}) {
    for (double ang : {0.0, ell.phi1 / 2.0, -ell.phi1 / 2.0}) lambdas.push_back(std::polar(r, ang));
  }
  EllipticProblem prob{k, a, {}, 0.0};

  // Single modes: u = e^{i xi x} e_j solves (mu_j + K(xi) + lambda) u = f.
  double mode_err = 0.0;
  for (const Complex& lambda : {lambdas[0], lambdas[4], lambdas[11]}) {
    prob.lambda = lambda;
    for (const auto& [k1, k2, j] : {std::tuple{1, 0, 0}, std::tuple{-3, 2, 5}, std::tuple{2, 7, 15}}) {
      const Complex sym = rot * Complex(double(k1) * k1 + double(k2) * k2) + a.spectrum()[j] + lambda;
      const auto f = GridFunction::sample(g, a.space(), [&, k1 = k1, k2 = k2, j = j](std::span<const double> x, std::span<Complex> v) {
        for (auto& e : v) e = 0.0;
        v[static_cast<std::size_t>(j)] = std::exp(Complex(0.0, k1 * x[0] + k2 * x[1]));
      });
      const GridFunction u = solve_principal(prob, f);
      for (std::size_t p = 0; p < g.point_count(); ++p) {
        const Complex expected = f(p, static_cast<std::size_t>(j)) / sym;
        mode_err = std::max(mode_err, std::abs(u(p, static_cast<std::size_t>(j)) - expected) / std::abs(1.0 / sym));
      }
    }
  }
  d << "single-mode error " << sci(mode_err) << "; ";
  d.check(mode_err <= 1e-9, "single mode");

  std::vector<GridFunction> corpus;
  for (std::size_t i = 0; i < 16; ++i) corpus.push_back(random_band_limited(g, 16, 77, 100 + i).sample(g, a.space()));
  double worst_res = 0.0;
  for (const Complex& lambda : lambdas) {
    prob.lambda = lambda;
    for (const auto& f : corpus) worst_res = std::max(worst_res, relative_residual(prob, solve_principal(prob, f), f));
  }
  d << "max residual " << sci(worst_res) << "; ";
  d.check(worst_res <= 1e-7, "residual");

  const EstimateReport r = coercive_report(prob, corpus, lambdas);
  const double spread = r.max_ratio / r.min_ratio();
  d << "coercive ratio " << fix(r.min_ratio(), 4) << ".." << fix(r.max_ratio, 4) << " (max/min " << fix(spread) << ") ";
  d.check(spread <= 3.0, "coercivity spread");
  return d.done();
}

// 6. Perturbed solve against a dense oracle, non-contraction detector
Outcome perturbed_solve() {
  Detail d;
  const auto t0 = std::chrono::steady_clock::now();
  struct Instance {
    Grid grid;
    std::size_t n;
  };
  const std::vector<Instance> instances{{Grid({kPi}, {32}), 4}, {Grid({kPi, kPi}, {8, 8}), 4}, {Grid({kPi, kPi}, {16, 16}), 4}};
  double worst = 0.0;
  for (const auto& inst : instances) {
    const auto a = PositiveOperator::lq_diagonal(1.0, inst.n);
    const int dim = inst.grid.dim();
    EllipticProblem prob{PrincipalPart::laplacian(dim), a, {}, 5.0};
    const auto coefficient = [&](double scale) {
      std::vector<Eigen::MatrixXcd> per_point;
      std::vector<double> x(static_cast<std::size_t>(dim));
      for (std::size_t p = 0; p < inst.grid.point_count(); ++p) {
        inst.grid.point(p, x);
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(inst.n), static_cast<Eigen::Index>(inst.n));
        for (std::size_t i = 0; i < inst.n; ++i) {
          c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = scale * (1.0 + 0.5 * std::cos(x[0]));
          if (i + 1 < inst.n) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = Complex(0.0, 0.2 * scale);
        }
        per_point.push_back(c);
      }
      return per_point;
    };
    std::vector<int> alpha(static_cast<std::size_t>(dim), 0);
    alpha[0] = 1;
    prob.lower.push_back(LowerOrderTerm{MultiIndex(alpha), coefficient(0.3), 0.25});
    prob.lower.push_back(LowerOrderTerm{MultiIndex::zero(dim), coefficient(0.5), 0.5});
    const GridFunction f = random_band_limited(inst.grid, inst.n, 5, 100).sample(inst.grid, a.space());
    const auto sol = solve_perturbed(prob, f);
    const double err = relative_l2(sol.u, oracle::dense_elliptic_solve(prob, f));
    worst = std::max(worst, err);
    d << inst.grid.point_count() * inst.n << " dims: " << sci(err) << " (" << sol.iterations << " it); ";

    if (&inst == &instances.front()) {
      EllipticProblem strong = prob;
      strong.lower.front().coefficient = coefficient(30.0);
      strong.lambda = 1e6;
      bool contracted = true;
      try {
        solve_perturbed(strong, f);
      } catch (const NonContraction&) {
        contracted = false;
      }
      strong.lambda = 1.0;
      bool fired = false;
      try {
        solve_perturbed(strong, f);
      } catch (const NonContraction& e) {
        fired = e.condition() == "contraction";
      }
      d << "x100 term: contracts at lambda=1e6 " << (contracted ? "yes" : "no") << ", detector at lambda=1 "
        << (fired ? "fired" : "silent") << "; ";
      d.check(contracted && fired, "non-contraction detector");
    }
  }
  d.check(worst <= 1e-6, "dense agreement");
  const double elapsed = seconds_since(t0);
  d << fix(elapsed) << " s ";
  d.check(elapsed < 60.0, "runtime");
  return d.done();
}

Forcing smooth_forcing(std::size_t n) {
  return [n](double t, std::span<const double> x, std::span<Complex> v) {
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = std::sin(kPi * t) * (std::cos(x[0] + static_cast<double>(i)) + 0.5 * std::sin(3.0 * x[0])) +
             t * Complex(0.0, 1.0) * std::cos(2.0 * x[0]) / (1.0 + static_cast<double>(i));
    }
  };
}

std::vector<std::vector<GridFunction>> separable_corpus(const Grid& g, const ValueSpace& space, std::size_t count,
                                                        std::size_t steps) {
  std::vector<std::vector<GridFunction>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const GridFunction b = random_band_limited(g, space.dim, 31, 100 + i).sample(g, space);
    const double phase = 0.37 * static_cast<double>(i);
    std::vector<GridFunction> series;
    for (std::size_t s = 0; s <= steps; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(steps);
      series.push_back(Complex(std::cos(2.0 * kPi * t + phase) + 0.5 * std::sin(6.0 * kPi * t)) * b);
    }
    out.push_back(std::move(series));
  }
  return out;
}

// 7. Cauchy solver order against implicit Euler, maximal regularity stability
Outcome cauchy_regularity() {
  Detail d;
  const Grid g({kPi}, {16});
  const auto a = PositiveOperator::lq_diagonal(0.5, 2);
  ParabolicProblem prob{PrincipalPart::laplacian(1), a};
  prob.steps = 256;
  const Forcing f = smooth_forcing(2);
  const auto sol = solve_cauchy(prob, sample_forcing(g, a.space(), f, 1.0, prob.steps));
  std::vector<double> errors;
  for (std::size_t steps : {64u, 128u, 256u, 512u}) {
    errors.push_back(relative_l2(oracle::implicit_euler(prob, g, a.space(), f, steps), sol.u.back()));
  }
  d << "orders";
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double order = std::log2(errors[i - 1] / errors[i]);
    d << ' ' << fix(order);
    d.check(order >= 0.9 && order <= 1.1, "order");
  }
  d << "; ";

  const Grid g2({kPi}, {32});
  const auto a2 = PositiveOperator::lq_diagonal(1.0, 8);
  ParabolicProblem mr{PrincipalPart::laplacian(1), a2};
  double previous = 0.0;
  for (std::size_t steps : {64u, 128u, 256u}) {
    mr.steps = steps;
    const double r = maximal_regularity_report(mr, separable_corpus(g2, a2.space(), 16, steps)).max_ratio;
    d << "steps " << steps << ": " << fix(r, 4) << "; ";
    if (previous > 0.0) d.check(std::max(r, previous) / std::min(r, previous) <= 1.5, "time-grid doubling");
    previous = r;
  }
  return d.done();
}

// 8. R-bound of lambda (A + L0(xi) + lambda)^{-1}
Outcome rpositivity() {
  Detail d;
  const Grid g({kPi}, {32});
  auto sector = [](std::size_t radii, std::size_t angles) {
    std::vector<Complex> out;
    for (double r : log_spaced(1e-2, 1e2, radii)) {
      for (std::size_t k = 0; k < angles; ++k) {
        const double t = -0.75 * kPi + 1.5 * kPi * static_cast<double>(k) / static_cast<double>(angles - 1);
        out.push_back(std::polar(r, t));
      }
    }
    return out;
  };
  ParabolicProblem prob{PrincipalPart::laplacian(1), PositiveOperator::lq_diagonal(1.0, 4)};
  RBoundOptions opts;
  opts.seed = 8;
  opts.vector_draws = 200;
  const auto base = rpositivity_symbol_check(prob, g, sector(5, 5), opts);
  RBoundOptions doubled = opts;
  doubled.vector_draws = 400;
  const auto dbl = rpositivity_symbol_check(prob, g, sector(9, 9), doubled);
  const double change = std::abs(dbl.estimate.bound / base.estimate.bound - 1.0);
  d << "diagonal A: " << fix(base.estimate.bound, 4) << " (" << base.estimate.family_size << " operators) -> "
    << fix(dbl.estimate.bound, 4) << " (" << dbl.estimate.family_size << "), change " << fix(100 * change, 2) << "%; ";
  d.check(std::isfinite(base.estimate.bound) && change <= 0.10, "diagonal stability");

  ParabolicProblem scalar{PrincipalPart::laplacian(1), PositiveOperator::identity(1)};
  std::vector<Complex> positive;
  for (double r : log_spaced(1e-3, 1e3, 25)) positive.push_back(r);
  const auto s = rpositivity_symbol_check(scalar, g, positive, opts);
  d << "A=I, lambda>0: " << fix(s.estimate.bound, 9) << " ";
  d.check(s.estimate.bound <= 1.0 + 1e-6, "scalar bound");
  return d.done();
}

// 9. Degenerate path
Outcome degenerate_path() {
  Detail d;
  const Forcing f = [](double t, std::span<const double> x, std::span<Complex> v) {
    v[0] = std::sin(kPi * t) * std::exp(-4.0 * x[0] * x[0]);
    v[1] = t * std::cos(kPi * x[0]);
  };
  const auto a = PositiveOperator::lq_diagonal(0.5, 2);
  {
    const Grid g({1.0}, {32});
    ParabolicProblem prob{PrincipalPart::laplacian(1), a};
    prob.steps = 32;
    const auto deg = solve_degenerate({[](double) { return 1.0; }}, prob, g, 2, f);
    const auto reg = solve_cauchy(prob, sample_forcing(g, a.space(), f, 1.0, 32));
    double diff = 0.0;
    for (std::size_t i = 0; i < reg.u.back().values().size(); ++i) {
      diff = std::max(diff, std::abs(deg.solution.u.back().values()[i] - reg.u.back().values()[i]));
    }
    diff /= std::max(1.0, reg.u.back().max_abs());
    d << "unit weight vs regular " << sci(diff) << "; ";
    d.check(diff <= 1e-12, "unit weight");
  }
  {
    const Grid g({1.0}, {64});
    ParabolicProblem prob{PrincipalPart::laplacian(1), a};
    prob.steps = 64;
    const auto deg = solve_degenerate({[](double y) { return std::sqrt(std::abs(y)); }}, prob, g, 2, f);
    d << "|y|^(1/2): residual " << sci(deg.residual) << ", induced A_p " << fix(deg.ap_constant, 4) << "; ";
    d.check(deg.residual <= 1e-5, "square-root residual");
  }
  {
    const Grid g({1.0}, {32});
    ParabolicProblem prob{PrincipalPart::laplacian(1), a};
    prob.steps = 4;
    std::string condition = "none";
    try {
      solve_degenerate({[](double y) { return std::abs(y); }}, prob, g, 2, f);
    } catch (const ConditionViolation& e) {
      condition = e.condition();
    }
    d << "|y| rejected by " << condition << " ";
    d.check(condition == "integrability", "linear weight rejection");
  }
  return d.done();
}

// 10. Coupled systems
Outcome coupled_system() {
  Detail d;
  Eigen::MatrixXd good(2, 2), bad(2, 2);
  good << 2, 1, 1, 2;
  bad << 1, 2, 2, 1;
  {
    const Grid g({kPi}, {16});
    const auto a = PositiveOperator::symmetric(good);
    ParabolicProblem prob{PrincipalPart::laplacian(1), a};
    prob.steps = 1024;
    const double k = 2.0;
    Eigen::VectorXcd c0(2), c1(2);
    c0 << 1.0, Complex(0.0, -2.0);
    c1 << -0.5, 1.0;
    auto g_of_t = [&](double t) { return Eigen::VectorXcd(std::sin(kPi * t) * c0 + t * c1); };
    const Forcing f = [&](double t, std::span<const double> x, std::span<Complex> v) {
      const Eigen::VectorXcd gt = g_of_t(t);
      const Complex e = std::exp(Complex(0.0, k * x[0]));
      v[0] = e * gt[0];
      v[1] = e * gt[1];
    };
    const auto sol = solve_system(prob, sample_forcing(g, a.space(), f, 1.0, prob.steps));
    const Eigen::MatrixXcd b = (good + k * k * Eigen::MatrixXd::Identity(2, 2)).cast<Complex>();
    const Eigen::VectorXcd ref = oracle::rk4(b, g_of_t, 1.0, 20000);
    Eigen::VectorXcd got(2);
    got << sol.u.back()(0, 0), sol.u.back()(0, 1);
    const double err = (got - ref).norm() / ref.norm();
    d << "ODE oracle " << sci(err) << "; ";
    d.check(err <= 1e-6, "ODE oracle");

    ParabolicProblem short_prob{PrincipalPart::laplacian(1), a};
    short_prob.steps = 16;
    const auto rep = system_report(short_prob, separable_corpus(g, a.space(), 2, 16));
    d << "C0 " << format_double(rep.c0) << "; ";
    d.check(std::abs(rep.c0 - 1.0) <= 1e-12, "C0");

    std::string condition = "none";
    try {
      ParabolicProblem bad_prob{PrincipalPart::laplacian(1), PositiveOperator::symmetric(bad)};
      bad_prob.steps = 16;
      system_report(bad_prob, separable_corpus(g, a.space(), 1, 16));
    } catch (const ConditionViolation& e) {
      condition = e.condition();
    }
    d << "[[1,2],[2,1]] rejected by " << condition << "; ";
    d.check(condition == "coupling-positivity", "indefinite coupling");
  }
  {
    const Grid g({kPi}, {32});
    double constants[2] = {0.0, 0.0};
    for (int which = 0; which < 2; ++which) {
      const std::size_t n = which == 0 ? 32 : 64;
      std::vector<double> entries(n);
      for (std::size_t i = 0; i < n; ++i) entries[i] = std::exp2(static_cast<double>(i + 1) / 8.0);
      const auto a = PositiveOperator::diagonal(entries);
      ParabolicProblem prob{PrincipalPart::laplacian(1), a};
      prob.steps = 64;
      prob.p1 = 3.0;
      constants[which] = system_report(prob, separable_corpus(g, a.space(), 8, 64)).mixed.max_ratio;
    }
    const double change = std::abs(constants[1] / constants[0] - 1.0);
    d << "N=32 " << fix(constants[0], 4) << ", N=64 " << fix(constants[1], 4) << " (" << fix(100 * change, 2) << "%) ";
    d.check(change <= 0.10, "truncation");
  }
  return d.done();
}

// 11. Determinism of the driver
std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Detail d;
  using nlohmann::json;
  const std::vector<json> configs{
      {{"kind", "ap-check"}, {"grid", {{"points", 64}, {"half_width", 1.0}}}, {"ap-check", {{"weights", {0.5, 1.5}}}}},
      {{"kind", "mikhlin"}, {"seed", 3}, {"grid", {{"points", 16}}}, {"space", {{"components", 2}}},
       {"mikhlin", {{"symbol", "resolvent"}, {"points_per_axis", 9}, {"vector_draws", 50}, {"growth_exponents", {4, 8}}}},
       {"operator", {{"type", "lq-diagonal"}, {"s", 1}}}},
      {{"kind", "embed"}, {"seed", 5}, {"grid", {{"points", {16, 16}}}}, {"space", {{"components", 3}}},
       {"operator", {{"type", "lq-diagonal"}, {"s", 1}}}, {"corpus", {{"size", 4}}},
       {"embed", {{"l", {2, 4}}, {"alpha", {1, 1}}}}},
      {{"kind", "elliptic"}, {"seed", 6}, {"grid", {{"points", {16, 16}}}}, {"space", {{"components", 4}}},
       {"operator", {{"type", "lq-diagonal"}, {"s", 1}}}, {"corpus", {{"size", 4}}},
       {"elliptic", {{"lambdas", {1, 10, {{"abs", 100}, {"arg", 0.5}}}}, {"lower", {{{"alpha", {1, 0}}, {"scale", 0.3}}}}}}},
      {{"kind", "parabolic"}, {"seed", 7}, {"grid", {{"points", 32}}}, {"space", {{"components", 4}}},
       {"operator", {{"type", "lq-diagonal"}, {"s", 1}}}, {"corpus", {{"size", 4}}},
       {"parabolic", {{"steps", 32}, {"vector_draws", 50}}}},
      {{"kind", "system"}, {"seed", 8}, {"grid", {{"points", 32}}}, {"space", {{"components", 2}}},
       {"operator", {{"type", "symmetric"}, {"matrix", {{2, 1}, {1, 2}}}}}, {"p1", 3}, {"corpus", {{"size", 4}}},
       {"system", {{"steps", 32}}}},
      {{"kind", "degenerate"}, {"seed", 9}, {"grid", {{"points", 32}, {"half_width", 1.0}}}, {"corpus", {{"size", 2}}},
       {"degenerate", {{"gamma_exponents", {0.5}}, {"steps", 16}}}},
  };
  const auto root = std::filesystem::temp_directory_path() / ("mrlab_determinism_" + std::to_string(::getpid()));
  std::size_t compared = 0;
  for (const auto& base : configs) {
    std::vector<std::vector<std::pair<std::string, std::string>>> runs;
    int run_id = 0;
    for (unsigned threads : {1u, 1u, 4u}) {
      json doc = base;
      doc["threads"] = threads;
      const auto cfg = driver::parse_config(doc);
      const auto dir = root / (cfg.kind + "_" + std::to_string(run_id++));
      const auto out = driver::run_experiment(cfg, dir);
      std::vector<std::pair<std::string, std::string>> files;
      for (const auto& f : out.files) {
        if (f.extension() == ".csv") files.emplace_back(f.filename().string(), read_file(f));
      }
      runs.push_back(std::move(files));
    }
    bool same = runs[0].size() == runs[1].size() && runs[0].size() == runs[2].size() && !runs[0].empty();
    for (std::size_t i = 0; same && i < runs[0].size(); ++i) {
      same = runs[0][i] == runs[1][i] && runs[0][i] == runs[2][i];
      ++compared;
    }
    d << base["kind"].get<std::string>() << (same ? " identical" : " DIFFERS") << "; ";
    d.check(same, base["kind"].get<std::string>());
  }
  std::filesystem::remove_all(root);
  d << compared << " CSV files compared across 3 runs (threads 1, 1, 4) ";
  return d.done();
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace mrlab

int main(int argc, char** argv) {
  using namespace mrlab;
  const std::vector<Criterion> criteria{
      {"c01", "transform core", transform_core},
      {"c02", "A_p threshold detector", ap_detector},
      {"c03", "Psi_h uniform in h", psi_uniform_bound},
      {"c04", "embedding constant under refinement", embedding_constant},
      {"c05", "elliptic solver and coercivity", elliptic_coercive},
      {"c06", "perturbed solve and non-contraction", perturbed_solve},
      {"c07", "Cauchy solver and maximal regularity", cauchy_regularity},
      {"c08", "R-positivity of the resolvent family", rpositivity},
      {"c09", "degenerate substitution", degenerate_path},
      {"c10", "coupled systems", coupled_system},
      {"c11", "determinism", determinism},
  };
  std::vector<std::string> filter(argv + 1, argv + argc);
  int failures = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    if (!filter.empty() && std::find(filter.begin(), filter.end(), c.id) == filter.end()) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.title << ": " << o.detail << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criterion matches the filter\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
