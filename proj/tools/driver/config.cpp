#include "driver/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "mrlab/report.hpp"

namespace mrlab::driver {

using nlohmann::json;

namespace {

std::string join_messages(const std::vector<Diagnostic>& d) {
  std::string out;
  for (const auto& x : d) out += (out.empty() ? "" : "; ") + x.path + ": " + x.message;
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Diagnostic>& out) : out_(out) {}

  void fail(const std::string& path, const std::string& message) { out_.push_back({path, message}); }

  const json* child(const json& obj, const std::string& key) const {
    if (!obj.is_object()) return nullptr;
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
  }

  double number(const json& obj, const std::string& key, const std::string& path, double def) {
    const json* v = child(obj, key);
    if (v == nullptr) return def;
    if (!v->is_number()) {
      fail(path + "/" + key, "expected a number");
      return def;
    }
    return v->get<double>();
  }

  double positive(const json& obj, const std::string& key, const std::string& path, double def) {
    const double v = number(obj, key, path, def);
    if (!(v > 0.0) || !std::isfinite(v)) fail(path + "/" + key, "must be positive and finite, got " + format_double(v));
    return v;
  }

  double exponent(const json& obj, const std::string& key, const std::string& path, double def) {
    const double v = number(obj, key, path, def);
    if (!(v > 1.0) || !std::isfinite(v)) fail(path + "/" + key, "must lie in (1, inf), got " + format_double(v));
    return v;
  }

  std::int64_t integer(const json& obj, const std::string& key, const std::string& path, std::int64_t def,
                       std::int64_t lo, std::int64_t hi) {
    const json* v = child(obj, key);
    if (v == nullptr) return def;
    if (!v->is_number_integer()) {
      fail(path + "/" + key, "expected an integer");
      return def;
    }
    const auto x = v->get<std::int64_t>();
    if (x < lo || x > hi) {
      fail(path + "/" + key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(x));
    }
    return x;
  }

  std::string string(const json& obj, const std::string& key, const std::string& path, const std::string& def) {
    const json* v = child(obj, key);
    if (v == nullptr) return def;
    if (!v->is_string()) {
      fail(path + "/" + key, "expected a string");
      return def;
    }
    return v->get<std::string>();
  }

  bool boolean(const json& obj, const std::string& key, const std::string& path, bool def) {
    const json* v = child(obj, key);
    if (v == nullptr) return def;
    if (!v->is_boolean()) {
      fail(path + "/" + key, "expected true or false");
      return def;
    }
    return v->get<bool>();
  }

  // A number is broadcast to `broadcast` entries when broadcast > 0.
  std::vector<double> numbers(const json& obj, const std::string& key, const std::string& path,
                              std::vector<double> def, std::size_t broadcast = 0) {
    const json* v = child(obj, key);
    if (v == nullptr) return def;
    if (v->is_number() && broadcast > 0) return std::vector<double>(broadcast, v->get<double>());
    if (!v->is_array()) {
      fail(path + "/" + key, "expected an array of numbers");
      return def;
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (!(*v)[i].is_number()) {
        fail(path + "/" + key + "/" + std::to_string(i), "expected a number");
        continue;
      }
      out.push_back((*v)[i].get<double>());
    }
    return out;
  }

  std::vector<int> integers(const json& obj, const std::string& key, const std::string& path, std::vector<int> def) {
    const json* v = child(obj, key);
    if (v == nullptr) return def;
    if (!v->is_array()) {
      fail(path + "/" + key, "expected an array of integers");
      return def;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (!(*v)[i].is_number_integer()) {
        fail(path + "/" + key + "/" + std::to_string(i), "expected an integer");
        continue;
      }
      out.push_back((*v)[i].get<int>());
    }
    return out;
  }

  // Complex numbers are written as a plain number, {"re", "im"}, or {"abs", "arg"}.
  Complex complex(const json& v, const std::string& path) {
    if (v.is_number()) return v.get<double>();
    if (v.is_object() && (child(v, "abs") != nullptr || child(v, "arg") != nullptr)) {
      const double r = number(v, "abs", path, 1.0);
      if (!(r >= 0.0)) fail(path + "/abs", "modulus must be non-negative");
      return std::polar(r, number(v, "arg", path, 0.0));
    }
    if (v.is_object()) return {number(v, "re", path, 0.0), number(v, "im", path, 0.0)};
    fail(path, "expected a number, {re, im} or {abs, arg}");
    return 0.0;
  }

  std::vector<Complex> complexes(const json& obj, const std::string& key, const std::string& path) {
    const json* v = child(obj, key);
    if (v == nullptr) return {};
    if (!v->is_array()) {
      fail(path + "/" + key, "expected an array");
      return {};
    }
    std::vector<Complex> out;
    for (std::size_t i = 0; i < v->size(); ++i) out.push_back(complex((*v)[i], path + "/" + key + "/" + std::to_string(i)));
    return out;
  }

  Eigen::MatrixXd real_matrix(const json& v, const std::string& path, std::size_t n) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    if (!v.is_array() || v.size() != n) {
      fail(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " array of rows");
      return m;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!v[i].is_array() || v[i].size() != n) {
        fail(path + "/" + std::to_string(i), "row must have " + std::to_string(n) + " numbers");
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!v[i][j].is_number()) {
          fail(path + "/" + std::to_string(i) + "/" + std::to_string(j), "expected a number");
          continue;
        }
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v[i][j].get<double>();
      }
    }
    return m;
  }

  void unknown_keys(const json& obj, const std::string& path, std::initializer_list<const char*> known) {
    if (!obj.is_object()) return;
    for (const auto& [key, value] : obj.items()) {
      bool ok = false;
      for (const char* k : known) ok = ok || key == k;
      if (!ok) fail(path + "/" + key, "unknown field");
    }
  }

 private:
  std::vector<Diagnostic>& out_;
};

const json& section(const json& doc, const std::string& key) {
  static const json empty = json::object();
  const auto it = doc.find(key);
  return it == doc.end() ? empty : *it;
}

void read_grid(Reader& r, const json& doc, ExperimentConfig& c) {
  const json* g = r.child(doc, "grid");
  if (g == nullptr || !g->is_object()) {
    r.fail("/grid", "required object with points and half_width");
    c.points = {16};
    c.half_width = {1.0};
    return;
  }
  r.unknown_keys(*g, "/grid", {"points", "half_width"});
  const json* pts = r.child(*g, "points");
  if (pts == nullptr) {
    r.fail("/grid/points", "required");
  } else if (pts->is_number_integer()) {
    c.points = {pts->get<std::size_t>()};
  } else if (pts->is_array()) {
    for (std::size_t i = 0; i < pts->size(); ++i) {
      if (!(*pts)[i].is_number_integer() || (*pts)[i].get<std::int64_t>() < 0) {
        r.fail("/grid/points/" + std::to_string(i), "expected a non-negative integer");
        c.points.push_back(16);
      } else {
        c.points.push_back((*pts)[i].get<std::size_t>());
      }
    }
  } else {
    r.fail("/grid/points", "expected an integer or an array of integers");
  }
  if (c.points.empty() || c.points.size() > static_cast<std::size_t>(kMaxDim)) {
    r.fail("/grid/points", "grid dimension must be 1, 2 or 3");
    c.points = {16};
  }
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    if (c.points[k] < 4 || !is_power_of_two(c.points[k])) {
      r.fail("/grid/points/" + std::to_string(k),
             "m_k = " + std::to_string(c.points[k]) + " is not a power of two >= 4");
    }
  }
  c.half_width = r.numbers(*g, "half_width", "/grid", std::vector<double>(c.points.size(), 3.141592653589793),
                           c.points.size());
  if (c.half_width.size() != c.points.size()) {
    r.fail("/grid/half_width", "needs one entry per axis");
    c.half_width.assign(c.points.size(), 1.0);
  }
  for (std::size_t k = 0; k < c.half_width.size(); ++k) {
    if (!(c.half_width[k] > 0.0) || !std::isfinite(c.half_width[k])) {
      r.fail("/grid/half_width/" + std::to_string(k), "must be positive and finite");
    }
  }
}

void read_operator(Reader& r, const json& doc, ExperimentConfig& c) {
  const json& o = section(doc, "operator");
  r.unknown_keys(o, "/operator", {"type", "s", "entries", "matrix"});
  c.op.type = r.string(o, "type", "/operator", "identity");
  if (c.op.type == "identity") return;
  if (c.op.type == "lq-diagonal") {
    c.op.s = r.positive(o, "s", "/operator", 1.0);
    return;
  }
  if (c.op.type == "diagonal") {
    c.op.entries = r.numbers(o, "entries", "/operator", {});
    if (c.op.entries.size() != c.components) {
      r.fail("/operator/entries", "needs one entry per component (" + std::to_string(c.components) + ")");
    }
    for (std::size_t i = 0; i < c.op.entries.size(); ++i) {
      if (!(c.op.entries[i] > 0.0)) r.fail("/operator/entries/" + std::to_string(i), "entries must be positive");
      if (i > 0 && c.op.entries[i] < c.op.entries[i - 1]) {
        r.fail("/operator/entries/" + std::to_string(i), "entries must be nondecreasing");
      }
    }
    return;
  }
  if (c.op.type == "symmetric") {
    const json* m = r.child(o, "matrix");
    if (m == nullptr) {
      r.fail("/operator/matrix", "required for a symmetric operator");
      return;
    }
    c.op.matrix = r.real_matrix(*m, "/operator/matrix", c.components);
    if (!c.op.matrix.isApprox(c.op.matrix.transpose(), 1e-12) && c.op.matrix.norm() > 0.0) {
      r.fail("/operator/matrix", "matrix must be symmetric");
    }
    return;
  }
  r.fail("/operator/type", "unknown operator type '" + c.op.type + "' (identity, lq-diagonal, diagonal, symmetric)");
}

void read_principal(Reader& r, const json& doc, ExperimentConfig& c) {
  const json& o = section(doc, "principal");
  r.unknown_keys(o, "/principal", {"order", "terms"});
  c.principal_order = static_cast<int>(r.integer(o, "order", "/principal", 1, 1, 4));
  const json* terms = r.child(o, "terms");
  if (terms == nullptr) return;
  if (!terms->is_array() || terms->empty()) {
    r.fail("/principal/terms", "expected a nonempty array of {alpha, re, im}");
    return;
  }
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const std::string path = "/principal/terms/" + std::to_string(i);
    const json& t = (*terms)[i];
    r.unknown_keys(t, path, {"alpha", "re", "im", "abs", "arg"});
    const auto alpha = r.integers(t, "alpha", path, {});
    int total = 0;
    bool ok = alpha.size() == c.points.size();
    for (int a : alpha) {
      ok = ok && a >= 0;
      total += a;
    }
    if (!ok) {
      r.fail(path + "/alpha", "needs one non-negative order per axis");
      continue;
    }
    if (total != 2 * c.principal_order) {
      r.fail(path + "/alpha", "top-order terms need |alpha| = 2 l = " + std::to_string(2 * c.principal_order));
      continue;
    }
    c.principal_terms.push_back(PrincipalTerm{MultiIndex(alpha), r.complex(t, path)});
  }
}

void read_lambdas(Reader& r, const json& o, const std::string& path, std::vector<Complex>& out) {
  out = r.complexes(o, "lambdas", path);
  const json* sweep = r.child(o, "lambda_sweep");
  if (sweep == nullptr) return;
  r.unknown_keys(*sweep, path + "/lambda_sweep", {"magnitudes", "angles"});
  const auto mags = r.numbers(*sweep, "magnitudes", path + "/lambda_sweep", {1.0});
  const auto angles = r.numbers(*sweep, "angles", path + "/lambda_sweep", {0.0});
  for (double m : mags) {
    if (!(m > 0.0)) r.fail(path + "/lambda_sweep/magnitudes", "magnitudes must be positive");
    for (double a : angles) out.push_back(std::polar(m, a));
  }
}

void read_ap_check(Reader& r, const json& o, ExperimentConfig& c) {
  const std::string path = "/ap-check";
  r.unknown_keys(o, path, {"weights", "levels", "stable_tolerance", "growth_tolerance"});
  auto& a = c.ap_check;
  const json* w = r.child(o, "weights");
  if (w == nullptr) {
    a.weights.push_back(c.weight_exponents);
  } else if (!w->is_array() || w->empty()) {
    r.fail(path + "/weights", "expected a nonempty array of exponents (number or per-axis array)");
  } else {
    for (std::size_t i = 0; i < w->size(); ++i) {
      const json& e = (*w)[i];
      const std::string p = path + "/weights/" + std::to_string(i);
      if (e.is_number()) {
        std::vector<double> v(c.points.size(), 0.0);
        v[0] = e.get<double>();
        a.weights.push_back(v);
      } else if (e.is_array() && e.size() == c.points.size()) {
        std::vector<double> v;
        for (const auto& x : e) v.push_back(x.is_number() ? x.get<double>() : 0.0);
        a.weights.push_back(v);
      } else {
        r.fail(p, "expected a number or one exponent per axis");
      }
    }
  }
  a.levels = static_cast<int>(r.integer(o, "levels", path, 5, 2, 12));
  a.stable_tolerance = r.positive(o, "stable_tolerance", path, 0.02);
  a.growth_tolerance = r.positive(o, "growth_tolerance", path, 0.05);
}

void read_mikhlin(Reader& r, const json& o, ExperimentConfig& c) {
  const std::string path = "/mikhlin";
  r.unknown_keys(o, path, {"symbol", "axis", "lambda", "coefficients", "orders", "range_exponent", "points_per_axis",
                           "growth_exponents", "growth_tolerance", "vector_draws", "sign_trials"});
  auto& m = c.mikhlin;
  m.symbol = r.string(o, "symbol", path, "riesz-like");
  static const std::vector<std::string> known{"identity", "hilbert", "riesz-like", "log-modulus", "resolvent"};
  if (std::find(known.begin(), known.end(), m.symbol) == known.end()) {
    r.fail(path + "/symbol", "unknown symbol '" + m.symbol + "' (identity, hilbert, riesz-like, log-modulus, resolvent)");
  }
  m.axis = static_cast<int>(r.integer(o, "axis", path, 0, 0, static_cast<std::int64_t>(c.points.size()) - 1));
  if (const json* l = r.child(o, "lambda")) m.lambda = r.complex(*l, path + "/lambda");
  m.coefficients = r.numbers(o, "coefficients", path, {});
  m.orders = r.integers(o, "orders", path, {});
  if (m.coefficients.size() != m.orders.size()) r.fail(path + "/orders", "coefficients and orders differ in length");
  if (!m.coefficients.empty() && m.coefficients.size() != c.points.size()) {
    r.fail(path + "/coefficients", "needs one coefficient per axis");
  }
  m.range_exponent = r.positive(o, "range_exponent", path, 8.0);
  m.points_per_axis = static_cast<int>(r.integer(o, "points_per_axis", path, 33, 3, 1025));
  m.growth_exponents = r.numbers(o, "growth_exponents", path, {8.0, 16.0, 32.0});
  for (std::size_t i = 1; i < m.growth_exponents.size(); ++i) {
    if (!(m.growth_exponents[i] > m.growth_exponents[i - 1])) {
      r.fail(path + "/growth_exponents/" + std::to_string(i), "range exponents must increase");
    }
  }
  m.growth_tolerance = r.positive(o, "growth_tolerance", path, 1.25);
  m.vector_draws = static_cast<std::size_t>(r.integer(o, "vector_draws", path, 2000, 0, 1000000));
  m.sign_trials = static_cast<std::size_t>(r.integer(o, "sign_trials", path, 2048, 1, 1000000));
}

void read_embed(Reader& r, const json& o, ExperimentConfig& c) {
  const std::string path = "/embed";
  r.unknown_keys(o, path, {"l", "alpha", "mu", "h_range", "h0"});
  auto& e = c.embed;
  const std::size_t n = c.points.size();
  e.l = r.integers(o, "l", path, std::vector<int>(n, 2));
  e.alpha = r.integers(o, "alpha", path, std::vector<int>(n, 0));
  bool shapes_ok = true;
  if (e.l.size() != n) {
    r.fail(path + "/l", "needs one order per axis");
    shapes_ok = false;
  }
  if (e.alpha.size() != n) {
    r.fail(path + "/alpha", "needs one order per axis");
    shapes_ok = false;
  }
  double kappa = 0.0;
  if (shapes_ok) {
    for (std::size_t k = 0; k < n; ++k) {
      if (e.l[k] < 1) r.fail(path + "/l/" + std::to_string(k), "l_k must be >= 1");
      if (e.alpha[k] < 0) r.fail(path + "/alpha/" + std::to_string(k), "alpha_k must be >= 0");
      if (e.l[k] >= 1) kappa += static_cast<double>(e.alpha[k]) / e.l[k];
    }
    if (kappa > 1.0 + 1e-12) r.fail(path + "/alpha", "kappa = |alpha:l| = " + format_double(kappa) + " exceeds 1");
  }
  const double top = 1.0 - kappa;
  e.mu = r.numbers(o, "mu", path, {0.0, 0.5 * top, top}, 1);
  for (std::size_t i = 0; i < e.mu.size(); ++i) {
    if (e.mu[i] < -1e-12 || e.mu[i] > top + 1e-12) {
      r.fail(path + "/mu/" + std::to_string(i), "mu = " + format_double(e.mu[i]) +
                                                    " lies outside the embedding range 0 <= mu <= 1 - kappa = " +
                                                    format_double(top));
    }
  }
  if (const json* h = r.child(o, "h_range")) {
    r.unknown_keys(*h, path + "/h_range", {"lo", "hi", "count"});
    e.h_lo = r.positive(*h, "lo", path + "/h_range", 1e-3);
    e.h_hi = r.positive(*h, "hi", path + "/h_range", 1.0);
    e.h_count = static_cast<std::size_t>(r.integer(*h, "count", path + "/h_range", 10, 1, 10000));
    if (e.h_hi < e.h_lo) r.fail(path + "/h_range/hi", "hi must be >= lo");
  }
  e.h0 = r.positive(o, "h0", path, 1.0);
}

void read_lower(Reader& r, const json& o, const std::string& path, ExperimentConfig& c) {
  const json* lower = r.child(o, "lower");
  if (lower == nullptr) return;
  if (!lower->is_array()) {
    r.fail(path + "/lower", "expected an array of lower-order terms");
    return;
  }
  for (std::size_t i = 0; i < lower->size(); ++i) {
    const std::string p = path + "/lower/" + std::to_string(i);
    const json& t = (*lower)[i];
    r.unknown_keys(t, p, {"alpha", "scale", "matrix", "mu"});
    LowerTermConfig term;
    term.alpha = r.integers(t, "alpha", p, {});
    int total = 0;
    bool ok = term.alpha.size() == c.points.size();
    for (int a : term.alpha) {
      ok = ok && a >= 0;
      total += a;
    }
    if (!ok) {
      r.fail(p + "/alpha", "needs one non-negative order per axis");
      continue;
    }
    if (total >= 2 * c.principal_order) {
      r.fail(p + "/alpha", "lower-order terms need |alpha| < 2 l");
      continue;
    }
    const auto n = static_cast<Eigen::Index>(c.components);
    if (const json* m = r.child(t, "matrix")) {
      term.coefficient = r.real_matrix(*m, p + "/matrix", c.components).cast<Complex>();
    } else {
      term.coefficient = Eigen::MatrixXcd::Identity(n, n);
    }
    term.coefficient *= r.number(t, "scale", p, 1.0);
    const double top = 1.0 - static_cast<double>(total) / (2.0 * c.principal_order);
    term.mu = r.number(t, "mu", p, 0.5 * top);
    if (!(term.mu > 0.0 && term.mu < top)) {
      r.fail(p + "/mu", "mu_alpha must lie in (0, 1 - |alpha|/2l) = (0, " + format_double(top) + ")");
    }
    c.elliptic.lower.push_back(std::move(term));
  }
}

void read_elliptic(Reader& r, const json& o, ExperimentConfig& c) {
  const std::string path = "/elliptic";
  r.unknown_keys(o, path, {"lambdas", "lambda_sweep", "lower", "residual_tolerance", "neumann"});
  auto& e = c.elliptic;
  read_lambdas(r, o, path, e.lambdas);
  if (e.lambdas.empty()) r.fail(path + "/lambdas", "give lambdas or lambda_sweep");
  read_lower(r, o, path, c);
  e.residual_tolerance = r.positive(o, "residual_tolerance", path, 1e-7);
  if (const json* n = r.child(o, "neumann")) {
    r.unknown_keys(*n, path + "/neumann", {"tolerance", "max_iterations", "stall_window"});
    e.neumann.tolerance = r.positive(*n, "tolerance", path + "/neumann", 1e-10);
    e.neumann.max_iterations = static_cast<int>(r.integer(*n, "max_iterations", path + "/neumann", 200, 1, 100000));
    e.neumann.stall_window = static_cast<int>(r.integer(*n, "stall_window", path + "/neumann", 5, 1, 1000));
  }
}

void read_parabolic(Reader& r, const json& o, const std::string& path, ExperimentConfig& c) {
  r.unknown_keys(o, path, {"horizon", "steps", "lambdas", "lambda_sweep", "vector_draws"});
  auto& pp = c.parabolic;
  pp.horizon = r.positive(o, "horizon", path, 1.0);
  pp.steps = static_cast<std::size_t>(r.integer(o, "steps", path, 64, 1, 1 << 20));
  read_lambdas(r, o, path, pp.rpositivity_lambdas);
  pp.vector_draws = static_cast<std::size_t>(r.integer(o, "vector_draws", path, 500, 0, 1000000));
}

void read_degenerate(Reader& r, const json& o, ExperimentConfig& c) {
  const std::string path = "/degenerate";
  r.unknown_keys(o, path, {"gamma_exponents", "divergence_threshold", "ap_threshold", "horizon", "steps"});
  auto& d = c.degenerate;
  d.gamma_exponents = r.numbers(o, "gamma_exponents", path, std::vector<double>(c.points.size(), 0.0), c.points.size());
  if (d.gamma_exponents.size() != c.points.size()) r.fail(path + "/gamma_exponents", "needs one exponent per axis");
  for (std::size_t k = 0; k < d.gamma_exponents.size(); ++k) {
    if (d.gamma_exponents[k] < 0.0) r.fail(path + "/gamma_exponents/" + std::to_string(k), "exponent must be >= 0");
  }
  d.divergence_threshold = r.positive(o, "divergence_threshold", path, 1e8);
  d.ap_threshold = r.positive(o, "ap_threshold", path, 10.0);
  json rest = json::object();
  for (const char* k : {"horizon", "steps"}) {
    if (const json* v = r.child(o, k)) rest[k] = *v;
  }
  read_parabolic(r, rest, path, c);
}

ExperimentConfig read_all(const json& doc, std::vector<Diagnostic>& diags) {
  Reader r(diags);
  ExperimentConfig c;
  if (!doc.is_object()) {
    r.fail("", "config must be a JSON object");
    return c;
  }
  r.unknown_keys(doc, "", {"kind", "seed", "threads", "grid", "space", "operator", "principal", "weight", "p", "p1",
                           "corpus", "output", "ap-check", "mikhlin", "embed", "elliptic", "parabolic", "system",
                           "degenerate"});
  c.kind = r.string(doc, "kind", "", "");
  const auto& kinds = experiment_kinds();
  if (c.kind.empty()) {
    r.fail("/kind", "required");
  } else if (std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end()) {
    r.fail("/kind", "unknown experiment kind '" + c.kind + "'");
  }
  c.seed = static_cast<std::uint64_t>(r.integer(doc, "seed", "", 0, 0, std::numeric_limits<std::int64_t>::max()));
  c.threads = static_cast<unsigned>(r.integer(doc, "threads", "", 0, 0, 1024));
  read_grid(r, doc, c);

  const json& space = section(doc, "space");
  r.unknown_keys(space, "/space", {"components", "q"});
  c.components = static_cast<std::size_t>(r.integer(space, "components", "/space", 1, 1, 4096));
  c.q = r.exponent(space, "q", "/space", 2.0);

  read_operator(r, doc, c);
  read_principal(r, doc, c);

  const json& weight = section(doc, "weight");
  r.unknown_keys(weight, "/weight", {"exponents", "ap_threshold"});
  c.weight_exponents = r.numbers(weight, "exponents", "/weight", {});
  if (!c.weight_exponents.empty() && c.weight_exponents.size() != c.points.size()) {
    r.fail("/weight/exponents", "needs one exponent per axis (or none for the unit weight)");
  }
  c.ap_threshold = r.positive(weight, "ap_threshold", "/weight", 10.0);
  c.p = r.exponent(doc, "p", "", 2.0);
  c.p1 = r.exponent(doc, "p1", "", 2.0);

  const json& corpus = section(doc, "corpus");
  r.unknown_keys(corpus, "/corpus", {"size", "component_decay"});
  c.corpus_size = static_cast<std::size_t>(r.integer(corpus, "size", "/corpus", 8, 1, 4096));
  c.component_decay = r.number(corpus, "component_decay", "/corpus", 0.0);
  if (c.component_decay < 0.0) r.fail("/corpus/component_decay", "must be >= 0");

  const json& output = section(doc, "output");
  r.unknown_keys(output, "/output", {"dir", "dump"});
  c.out_dir = r.string(output, "dir", "/output", ".");
  c.dump = r.boolean(output, "dump", "/output", false);

  const json& s = section(doc, c.kind);
  if (c.kind == "ap-check") read_ap_check(r, s, c);
  if (c.kind == "mikhlin") read_mikhlin(r, s, c);
  if (c.kind == "embed") read_embed(r, s, c);
  if (c.kind == "elliptic") read_elliptic(r, s, c);
  if (c.kind == "parabolic" || c.kind == "system") read_parabolic(r, s, "/" + c.kind, c);
  if (c.kind == "degenerate") read_degenerate(r, s, c);
  if (c.kind == "system" && c.op.type != "symmetric" && c.op.type != "diagonal" && c.op.type != "lq-diagonal" &&
      c.op.type != "identity") {
    r.fail("/operator/type", "system experiments need a matrix operator");
  }
  return c;
}

}  // namespace

ConfigError::ConfigError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error("invalid config: " + join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds{"ap-check", "mikhlin", "embed", "elliptic",
                                              "parabolic", "system", "degenerate"};
  return kinds;
}

std::vector<Diagnostic> validate_config(const json& doc) {
  std::vector<Diagnostic> diags;
  read_all(doc, diags);
  return diags;
}

ExperimentConfig parse_config(const json& doc) {
  std::vector<Diagnostic> diags;
  ExperimentConfig c = read_all(doc, diags);
  if (!diags.empty()) throw ConfigError(std::move(diags));
  return c;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  try {
    return json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError({{"", std::string("JSON parse error: ") + e.what()}});
  }
}

Grid ExperimentConfig::grid() const { return Grid(half_width, points); }

PositiveOperator ExperimentConfig::positive_operator() const {
  if (op.type == "lq-diagonal") return PositiveOperator::lq_diagonal(op.s, components, q);
  if (op.type == "diagonal") return PositiveOperator::diagonal(op.entries, q);
  if (op.type == "symmetric") return PositiveOperator::symmetric(op.matrix, q);
  return PositiveOperator::identity(components, q);
}

PrincipalPart ExperimentConfig::principal() const {
  const int n = static_cast<int>(points.size());
  if (principal_terms.empty()) return PrincipalPart::laplacian(n, principal_order);
  return PrincipalPart(n, principal_order, principal_terms);
}

}  // namespace mrlab::driver
