#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>

namespace mrlab {

enum class RBoundMethod { exhaustive, monte_carlo };

const char* to_string(RBoundMethod method);

struct RBoundOptions {
  std::size_t sign_trials = 2048;
  std::size_t vector_draws = 10000;
  std::uint64_t seed = 0;
  /// Families up to this size enumerate every sign pattern.
  std::size_t exhaustive_limit = 12;
  /// Cap on sign-patterns x family-size x dimension summed over vector draws.
  double work_budget = 2e8;
};

struct RBoundEstimate {
  std::string family;
  std::size_t family_size = 0;
  std::size_t sample_count = 0;
  double bound = 0.0;
  RBoundMethod method = RBoundMethod::exhaustive;
};

/// Lower estimate of R({T_j}) in l_q: the largest observed ratio
/// E||sum r_j T_j u_j|| / E||sum r_j u_j|| over searched tuples u_j, never
/// below max_j ||T_j||.
RBoundEstimate r_bound_estimate(std::span<const Eigen::MatrixXcd> family, double q,
                                const RBoundOptions& options = {}, std::string description = {});

}  // namespace mrlab
