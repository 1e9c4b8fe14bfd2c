#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "driver/config.hpp"

namespace mrlab::driver {

struct RunOutput {
  std::vector<std::filesystem::path> files;
  /// key/value lines also written to summary.csv
  std::vector<std::pair<std::string, std::string>> summary;
};

/// Runs the experiment named by cfg.kind and writes its reports into out_dir.
/// Condition failures propagate as ConditionViolation.
RunOutput run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

/// Throws ConditionViolation("ap-weight") when the configured weight has a
/// dyadic constant above cfg.ap_threshold or one that grows under refinement.
void require_ap_weight(const ExperimentConfig& cfg);

}  // namespace mrlab::driver
