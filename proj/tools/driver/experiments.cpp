#include "driver/experiments.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "driver/corpus.hpp"
#include "mrlab/ap_weight.hpp"
#include "mrlab/degenerate.hpp"
#include "mrlab/elliptic.hpp"
#include "mrlab/embedding.hpp"
#include "mrlab/errors.hpp"
#include "mrlab/mikhlin.hpp"
#include "mrlab/multiplier.hpp"
#include "mrlab/parabolic.hpp"
#include "mrlab/parallel.hpp"
#include "mrlab/report.hpp"
#include "mrlab/serialize.hpp"
#include "mrlab/system.hpp"

namespace mrlab::driver {

namespace fs = std::filesystem;

namespace {

std::string escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

class Writer {
 public:
  Writer(fs::path dir, RunOutput& out) : dir_(std::move(dir)), out_(out) {}

  std::ofstream open(const std::string& name) {
    const fs::path path = dir_ / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    out_.files.push_back(path);
    return f;
  }

  void report(const std::string& name, const EstimateReport& r) {
    auto f = open(name);
    write_csv(f, r);
    if (!f) throw std::runtime_error("write failed for " + name);
  }

  void table(const std::string& name, const std::vector<std::string>& header,
             const std::vector<std::vector<std::string>>& rows) {
    auto f = open(name);
    auto line = [&f](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) f << (i ? "," : "") << escape(cells[i]);
      f << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    if (!f) throw std::runtime_error("write failed for " + name);
  }

  void time_series(const std::string& name, double horizon, std::span<const GridFunction> u) {
    auto f = open(name);
    write_time_series(f, horizon, u);
  }

  void summary(std::string key, std::string value) { out_.summary.emplace_back(std::move(key), std::move(value)); }
  void summary(std::string key, double value) { summary(std::move(key), format_double(value)); }

 private:
  fs::path dir_;
  RunOutput& out_;
};

std::string fd(double v) { return format_double(v); }

std::string join(const std::vector<double>& v) {
  if (v.empty()) return "1";
  std::string s;
  for (double x : v) s += (s.empty() ? "" : " ") + fd(x);
  return s;
}

const char* verdict_name(ApVerdict v) {
  switch (v) {
    case ApVerdict::stable: return "stable";
    case ApVerdict::growing: return "growing";
    case ApVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::function<Weight(const Grid&)> weight_maker(std::vector<double> exponents) {
  return [spec = WeightSpec{std::move(exponents)}](const Grid& g) { return spec.on(g); };
}

Grid coarse_grid(const ExperimentConfig& cfg, std::size_t points) {
  return Grid(cfg.half_width, std::vector<std::size_t>(cfg.points.size(), points));
}

RBoundOptions rbound_options(const ExperimentConfig& cfg, std::size_t vector_draws, std::size_t sign_trials) {
  RBoundOptions o;
  o.seed = cfg.seed;
  o.vector_draws = vector_draws;
  o.sign_trials = sign_trials;
  return o;
}

void run_ap_check(const ExperimentConfig& cfg, Writer& w) {
  const Grid grid = cfg.grid();
  std::vector<std::vector<std::string>> ladder_rows, profile_rows, verdict_rows;
  for (const auto& exps : cfg.ap_check.weights) {
    const std::string label = join(exps);
    const auto ladder = ap_refinement_ladder(weight_maker(exps), grid, cfg.p, cfg.ap_check.levels);
    for (const auto& step : ladder) ladder_rows.push_back({label, std::to_string(step.points), fd(step.constant)});
    for (const auto& g : ap_profile(WeightSpec{exps}.on(grid), cfg.p)) {
      profile_rows.push_back({label, std::to_string(g.generation), fd(g.side), std::to_string(g.cube_count), fd(g.constant)});
    }
    const ApVerdict v = classify_ladder(ladder, cfg.ap_check.stable_tolerance, cfg.ap_check.growth_tolerance);
    verdict_rows.push_back({label, fd(ladder.front().constant), fd(ladder.back().constant), verdict_name(v)});
    w.summary("verdict[" + label + "]", verdict_name(v));
    w.summary("constant[" + label + "]", ladder.back().constant);
  }
  w.table("ap_ladder.csv", {"weight", "points", "constant"}, ladder_rows);
  w.table("ap_profile.csv", {"weight", "generation", "side", "cubes", "constant"}, profile_rows);
  w.table("ap_verdict.csv", {"weight", "coarsest_constant", "finest_constant", "verdict"}, verdict_rows);
}

OperatorSymbol mikhlin_symbol(const ExperimentConfig& cfg) {
  const auto& m = cfg.mikhlin;
  if (m.symbol == "identity") return symbols::identity();
  if (m.symbol == "hilbert") return symbols::hilbert(m.axis);
  if (m.symbol == "log-modulus") return symbols::log_modulus();
  if (m.symbol == "resolvent") return symbols::resolvent(cfg.positive_operator(), m.lambda, m.coefficients, m.orders);
  return symbols::riesz_like(m.axis);
}

void run_mikhlin(const ExperimentConfig& cfg, Writer& w) {
  const auto& m = cfg.mikhlin;
  const OperatorSymbol sym = mikhlin_symbol(cfg);
  const int n = static_cast<int>(cfg.points.size());
  MikhlinOptions opts;
  opts.range_exponent = m.range_exponent;
  opts.points_per_axis = m.points_per_axis;
  opts.rbound = rbound_options(cfg, m.vector_draws, m.sign_trials);
  const MikhlinGrowth growth = mikhlin_growth_check(sym, n, cfg.space(), opts, m.growth_exponents, m.growth_tolerance);

  std::vector<std::vector<std::string>> rows, totals;
  for (std::size_t i = 0; i < growth.certificates.size(); ++i) {
    const auto& cert = growth.certificates[i];
    for (const auto& t : cert.terms) {
      std::string beta;
      for (int k = 0; k < t.beta.dim(); ++k) beta += std::to_string(t.beta[k]);
      rows.push_back({fd(growth.range_exponents[i]), beta, std::to_string(t.estimate.family_size),
                      std::to_string(t.estimate.sample_count), fd(t.estimate.bound), to_string(t.estimate.method),
                      t.finite ? "1" : "0"});
    }
    totals.push_back({fd(growth.range_exponents[i]), fd(cert.total), cert.bounded ? "1" : "0", cert.reason});
  }
  w.table("mikhlin.csv", {"range_exponent", "beta", "family_size", "samples", "bound", "method", "finite"}, rows);
  w.table("mikhlin_summary.csv", {"range_exponent", "total", "bounded", "reason"}, totals);
  const double lattice = lattice_sup_norm(sym, cfg.grid(), cfg.space());
  w.summary("symbol", sym.name());
  w.summary("lattice_sup", lattice);
  w.summary("certificate_total", growth.certificates.empty() ? 0.0 : growth.certificates.front().total);
  w.summary("bounded", growth.bounded ? "1" : "0");
}

void run_embed(const ExperimentConfig& cfg, Writer& w) {
  require_ap_weight(cfg);
  const Grid grid = cfg.grid();
  const ValueSpace space = cfg.space();
  const auto& e = cfg.embed;
  const auto h_sweep = log_spaced(e.h_lo, e.h_hi, e.h_count);
  const auto corpus = sample_members(
      spatial_members(grid, cfg.components, cfg.corpus_size, cfg.seed, cfg.component_decay), grid, space);

  EstimateReport additive, multiplicative;
  additive.name = "embedding";
  multiplicative.name = "multiplicative";
  additive.param_names = multiplicative.param_names = {"mu", "h", "function"};
  std::vector<std::vector<std::string>> psi_rows;
  for (double mu : e.mu) {
    EmbeddingCase c{Anisotropy(e.l), MultiIndex(e.alpha), mu, 1.0, e.h0, cfg.positive_operator(), cfg.p, cfg.weight()};
    c.validate();
    double sup_lo = INFINITY, sup_hi = 0.0;
    for (double h : h_sweep) {
      EmbeddingCase ch = c;
      ch.h = h;
      const double s = psi_h_lattice_sup(ch, grid);
      sup_lo = std::min(sup_lo, s);
      sup_hi = std::max(sup_hi, s);
      psi_rows.push_back({fd(mu), fd(h), fd(s)});
    }
    double c_mu = 0.0, mult = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto a = embedding_inequality_report(corpus[i], c, h_sweep);
      for (const auto& r : a.rows) additive.add({r.params[0], r.params[1], static_cast<double>(i)}, r.lhs, r.rhs);
      additive.skipped += a.skipped;
      c_mu = std::max(c_mu, a.max_ratio);
      const auto m = multiplicative_estimate_report(corpus[i], c);
      for (const auto& r : m.rows) multiplicative.add({r.params[0], r.params[1], static_cast<double>(i)}, r.lhs, r.rhs);
      multiplicative.skipped += m.skipped;
      multiplicative.flagged = multiplicative.flagged || m.flagged;
      mult = std::max(mult, m.max_ratio);
    }
    w.summary("C_mu[" + fd(mu) + "]", c_mu);
    w.summary("multiplicative[" + fd(mu) + "]", mult);
    w.summary("psi_sup_spread[" + fd(mu) + "]", sup_hi / sup_lo);
  }
  w.report("embedding.csv", additive);
  w.report("multiplicative.csv", multiplicative);
  w.table("psi_sup.csv", {"mu", "h", "sup"}, psi_rows);
  w.summary("multiplicative_flagged", multiplicative.flagged ? "1" : "0");
}

EllipticProblem elliptic_problem(const ExperimentConfig& cfg) {
  EllipticProblem prob{cfg.principal(), cfg.positive_operator(), {}, 0.0};
  for (const auto& t : cfg.elliptic.lower) {
    prob.lower.push_back(LowerOrderTerm{MultiIndex(t.alpha), {t.coefficient}, t.mu});
  }
  return prob;
}

void run_elliptic(const ExperimentConfig& cfg, Writer& w) {
  require_ap_weight(cfg);
  const Grid grid = cfg.grid();
  const ValueSpace space = cfg.space();
  const EllipticityData ell = check_ellipticity(cfg.principal(), grid);
  w.summary("phi1", ell.phi1);
  w.summary("M0", ell.m0);
  for (const Complex& l : cfg.elliptic.lambdas) check_admissible_lambda(l, ell.phi1);

  EllipticProblem prob = elliptic_problem(cfg);
  const auto forcings = sample_members(
      spatial_members(grid, cfg.components, cfg.corpus_size, cfg.seed, cfg.component_decay), grid, space);

  if (!prob.lower.empty()) {
    const auto values = lower_order_condition_check(prob.lower, prob.a, prob.principal.order());
    for (std::size_t i = 0; i < values.size(); ++i) w.summary("lower_term_bound[" + std::to_string(i) + "]", values[i]);
  }

  std::vector<std::vector<std::string>> rows;
  double worst = 0.0;
  for (const Complex& lambda : cfg.elliptic.lambdas) {
    prob.lambda = lambda;
    for (std::size_t i = 0; i < forcings.size(); ++i) {
      int iterations = 0;
      GridFunction u = prob.lower.empty() ? solve_principal(prob, forcings[i]) : [&] {
        auto s = solve_perturbed(prob, forcings[i], cfg.elliptic.neumann);
        iterations = s.iterations;
        return std::move(s.u);
      }();
      const double res = relative_residual(prob, u, forcings[i]);
      worst = std::max(worst, res);
      rows.push_back({fd(lambda.real()), fd(lambda.imag()), std::to_string(i), fd(res), std::to_string(iterations)});
      if (cfg.dump && i == 0 && lambda == cfg.elliptic.lambdas.front()) {
        auto f = w.open("solution_0.bin");
        write_grid_function(f, u);
      }
    }
  }
  w.table("residuals.csv", {"lambda_re", "lambda_im", "forcing", "residual", "iterations"}, rows);
  const EstimateReport coercive = coercive_report(prob, forcings, cfg.elliptic.lambdas, cfg.p, cfg.weight());
  w.report("coercive.csv", coercive);
  w.summary("max_residual", worst);
  w.summary("residual_ok", worst <= cfg.elliptic.residual_tolerance ? "1" : "0");
  w.summary("coercive_max", coercive.max_ratio);
  w.summary("coercive_min", coercive.min_ratio());
}

ParabolicProblem parabolic_problem(const ExperimentConfig& cfg, std::size_t steps) {
  return ParabolicProblem{cfg.principal(), cfg.positive_operator(), cfg.parabolic.horizon, steps,
                          cfg.p,           cfg.p1,                  cfg.weight()};
}

std::vector<std::vector<GridFunction>> time_corpus(const ExperimentConfig& cfg, const Grid& grid, std::size_t steps) {
  std::vector<std::vector<GridFunction>> out;
  for (const auto& m : separable_members(grid, cfg.components, cfg.corpus_size, cfg.seed, cfg.component_decay,
                                         cfg.parabolic.horizon)) {
    out.push_back(m.snapshots(grid, cfg.space(), steps));
  }
  return out;
}

std::vector<Complex> rpositivity_lambdas(const ExperimentConfig& cfg) {
  if (!cfg.parabolic.rpositivity_lambdas.empty()) return cfg.parabolic.rpositivity_lambdas;
  std::vector<Complex> out;
  for (double r : log_spaced(1e-2, 1e2, 5)) {
    for (double a : {-0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75}) out.push_back(std::polar(r, a * std::numbers::pi));
  }
  return out;
}

void run_parabolic(const ExperimentConfig& cfg, Writer& w) {
  require_ap_weight(cfg);
  const Grid grid = cfg.grid();
  EstimateReport combined;
  combined.name = "maximal-regularity";
  combined.param_names = {"steps", "forcing"};
  for (std::size_t steps : {cfg.parabolic.steps, 2 * cfg.parabolic.steps}) {
    const ParabolicProblem prob = parabolic_problem(cfg, steps);
    const auto corpus = time_corpus(cfg, grid, steps);
    const auto r = maximal_regularity_report(prob, corpus);
    for (const auto& row : r.rows) combined.add({static_cast<double>(steps), row.params[0]}, row.lhs, row.rhs);
    combined.skipped += r.skipped;
    w.summary("max_ratio[steps=" + std::to_string(steps) + "]", r.max_ratio);
    if (cfg.dump && steps == cfg.parabolic.steps && !corpus.empty()) {
      w.time_series("forcing_0.bin", prob.horizon, corpus.front());
      w.time_series("solution_0.bin", prob.horizon, solve_cauchy(prob, corpus.front()).u);
    }
  }
  w.report("maximal_regularity.csv", combined);

  const auto lambdas = rpositivity_lambdas(cfg);
  const auto rp = rpositivity_symbol_check(parabolic_problem(cfg, cfg.parabolic.steps), grid, lambdas,
                                           rbound_options(cfg, cfg.parabolic.vector_draws, 2048));
  w.table("rpositivity.csv", {"lambdas", "family_size", "samples", "bound", "method", "skipped"},
          {{std::to_string(lambdas.size()), std::to_string(rp.estimate.family_size),
            std::to_string(rp.estimate.sample_count), fd(rp.estimate.bound), to_string(rp.estimate.method),
            std::to_string(rp.skipped)}});
  w.summary("rpositivity_bound", rp.estimate.bound);
}

void run_system(const ExperimentConfig& cfg, Writer& w) {
  require_ap_weight(cfg);
  const Grid grid = cfg.grid();
  const ParabolicProblem prob = parabolic_problem(cfg, cfg.parabolic.steps);
  const auto corpus = time_corpus(cfg, grid, cfg.parabolic.steps);
  const SystemReport r = system_report(prob, corpus);
  w.report("system_mixed.csv", r.mixed);
  w.report("system_spatial.csv", r.spatial);
  w.summary("C0", r.c0);
  w.summary("mixed_max", r.mixed.max_ratio);
  w.summary("spatial_max", r.spatial.max_ratio);
  if (cfg.dump && !corpus.empty()) w.time_series("solution_0.bin", prob.horizon, solve_system(prob, corpus.front()).u);
}

void run_degenerate(const ExperimentConfig& cfg, Writer& w) {
  const Grid grid = cfg.grid();
  std::vector<ScalarFunction> gamma;
  for (double e : cfg.degenerate.gamma_exponents) {
    if (e == 0.0) {
      gamma.emplace_back([](double) { return 1.0; });
    } else {
      gamma.emplace_back([e](double x) { return std::pow(std::abs(x), e); });
    }
  }
  DegenerateOptions opts{cfg.degenerate.divergence_threshold, cfg.degenerate.ap_threshold};
  const ParabolicProblem prob = parabolic_problem(cfg, cfg.parabolic.steps);
  const auto members = separable_members(grid, cfg.components, cfg.corpus_size, cfg.seed, cfg.component_decay,
                                         cfg.parabolic.horizon);
  std::vector<std::vector<std::string>> rows;
  double worst = 0.0, ap = 1.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto sol = solve_degenerate(gamma, prob, grid, cfg.components, members[i].as_forcing(), opts);
    ap = sol.ap_constant;
    worst = std::max(worst, sol.residual);
    for (const auto& row : sol.report.rows) {
      rows.push_back({std::to_string(i), fd(sol.residual), fd(sol.ap_constant), fd(row.lhs), fd(row.rhs), fd(row.ratio)});
    }
    if (cfg.dump && i == 0) w.time_series("solution_0.bin", prob.horizon, sol.solution.u);
  }
  w.table("degenerate.csv", {"forcing", "residual", "ap_constant", "lhs", "rhs", "ratio"}, rows);
  w.summary("induced_ap_constant", ap);
  w.summary("max_residual", worst);
}

}  // namespace

void require_ap_weight(const ExperimentConfig& cfg) {
  if (cfg.weight_exponents.empty()) return;
  const WeightSpec spec = cfg.weight();
  const double c = ap_constant(spec.on(cfg.grid()), cfg.p, default_cube_family(cfg.grid()));
  const std::string label = join(cfg.weight_exponents);
  if (!(c <= cfg.ap_threshold)) {
    throw ConditionViolation("ap-weight", "dyadic A_p constant exceeds the threshold",
                             {{"weight", label}, {"constant", fd(c)}, {"threshold", fd(cfg.ap_threshold)}});
  }
  const auto ladder = ap_refinement_ladder(weight_maker(cfg.weight_exponents), coarse_grid(cfg, 16), cfg.p, 3);
  if (classify_ladder(ladder) == ApVerdict::growing) {
    throw ConditionViolation("ap-weight", "dyadic A_p constant grows under refinement",
                             {{"weight", label}, {"constant", fd(ladder.back().constant)}});
  }
}

RunOutput run_experiment(const ExperimentConfig& cfg, const fs::path& out_dir) {
  set_thread_count(cfg.threads);
  fs::create_directories(out_dir);
  RunOutput out;
  Writer w(out_dir, out);
  w.summary("kind", cfg.kind);
  w.summary("seed", std::to_string(cfg.seed));
  if (cfg.kind == "ap-check") run_ap_check(cfg, w);
  else if (cfg.kind == "mikhlin") run_mikhlin(cfg, w);
  else if (cfg.kind == "embed") run_embed(cfg, w);
  else if (cfg.kind == "elliptic") run_elliptic(cfg, w);
  else if (cfg.kind == "parabolic") run_parabolic(cfg, w);
  else if (cfg.kind == "system") run_system(cfg, w);
  else if (cfg.kind == "degenerate") run_degenerate(cfg, w);
  else throw std::invalid_argument("unknown experiment kind '" + cfg.kind + "'");
  std::vector<std::vector<std::string>> rows;
  for (const auto& [k, v] : out.summary) rows.push_back({k, v});
  w.table("summary.csv", {"key", "value"}, rows);
  return out;
}

}  // namespace mrlab::driver
