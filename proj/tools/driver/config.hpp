#pragma once

#include <complex>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "mrlab/elliptic.hpp"
#include "mrlab/parabolic.hpp"

namespace mrlab::driver {

struct Diagnostic {
  std::string path;
  std::string message;
};

/// Thrown by parse_config when validation produced diagnostics.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct OperatorConfig {
  std::string type = "identity";
  double s = 1.0;
  std::vector<double> entries;
  Eigen::MatrixXd matrix;
};

struct LowerTermConfig {
  std::vector<int> alpha;
  Eigen::MatrixXcd coefficient;
  double mu = 0.0;
};

struct ApCheckParams {
  std::vector<std::vector<double>> weights;
  int levels = 5;
  double stable_tolerance = 0.02;
  double growth_tolerance = 0.05;
};

struct MikhlinParams {
  std::string symbol = "riesz-like";
  int axis = 0;
  Complex lambda = 1.0;
  std::vector<double> coefficients;
  std::vector<int> orders;
  double range_exponent = 8.0;
  int points_per_axis = 33;
  std::vector<double> growth_exponents{8.0, 16.0, 32.0};
  double growth_tolerance = 1.25;
  std::size_t vector_draws = 2000;
  std::size_t sign_trials = 2048;
};

struct EmbedParams {
  std::vector<int> l;
  std::vector<int> alpha;
  std::vector<double> mu;
  double h_lo = 1e-3;
  double h_hi = 1.0;
  std::size_t h_count = 10;
  double h0 = 1.0;
};

struct EllipticParams {
  std::vector<Complex> lambdas;
  std::vector<LowerTermConfig> lower;
  double residual_tolerance = 1e-7;
  NeumannOptions neumann;
};

struct ParabolicParams {
  double horizon = 1.0;
  std::size_t steps = 64;
  std::vector<Complex> rpositivity_lambdas;
  std::size_t vector_draws = 500;
};

struct DegenerateParams {
  std::vector<double> gamma_exponents;
  double divergence_threshold = 1e8;
  double ap_threshold = 10.0;
};

struct ExperimentConfig {
  std::string kind;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::vector<std::size_t> points;
  std::vector<double> half_width;
  std::size_t components = 1;
  double q = 2.0;
  OperatorConfig op;
  int principal_order = 1;
  std::vector<PrincipalTerm> principal_terms;
  std::vector<double> weight_exponents;
  double ap_threshold = 10.0;
  double p = 2.0;
  double p1 = 2.0;
  std::size_t corpus_size = 8;
  double component_decay = 0.0;
  std::string out_dir = ".";
  bool dump = false;

  ApCheckParams ap_check;
  MikhlinParams mikhlin;
  EmbedParams embed;
  EllipticParams elliptic;
  ParabolicParams parabolic;
  DegenerateParams degenerate;

  Grid grid() const;
  ValueSpace space() const { return ValueSpace(components, q); }
  PositiveOperator positive_operator() const;
  PrincipalPart principal() const;
  WeightSpec weight() const { return WeightSpec{weight_exponents}; }
};

const std::vector<std::string>& experiment_kinds();

/// Every violated invariant, each with a JSON-pointer style field path.
/// Empty iff parse_config succeeds.
std::vector<Diagnostic> validate_config(const nlohmann::json& doc);

ExperimentConfig parse_config(const nlohmann::json& doc);

nlohmann::json load_json(const std::string& path);

}  // namespace mrlab::driver
