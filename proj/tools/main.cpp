#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "driver/config.hpp"
#include "driver/experiments.hpp"
#include "mrlab/errors.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInvalidConfig = 2, kCondition = 3 };

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string token(const std::string& s) {
  return s.find_first_of(" \t\"=") == std::string::npos && !s.empty() ? s : quote(s);
}

// The one machine-parsable line: error=<kind> [condition=<name>] message="..." key=value...
int fail(int code, const std::string& kind, const std::string& message,
         const std::vector<std::pair<std::string, std::string>>& extra = {}) {
  std::ostringstream line;
  line << "error=" << kind;
  for (const auto& [k, v] : extra) {
    if (k == "condition") line << " condition=" << token(v);
  }
  line << " message=" << quote(message);
  for (const auto& [k, v] : extra) {
    if (k != "condition") line << ' ' << k << '=' << token(v);
  }
  std::cerr << line.str() << '\n';
  return code;
}

int report_diagnostics(const std::vector<mrlab::driver::Diagnostic>& diags) {
  for (const auto& d : diags) std::cerr << (d.path.empty() ? "/" : d.path) << ": " << d.message << '\n';
  return fail(kInvalidConfig, "invalid-config", std::to_string(diags.size()) + " problem(s) in config",
              {{"count", std::to_string(diags.size())}, {"path", diags.front().path.empty() ? "/" : diags.front().path}});
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const mrlab::driver::ConfigError& e) {
    return report_diagnostics(e.diagnostics());
  } catch (const mrlab::ConditionViolation& e) {
    std::vector<std::pair<std::string, std::string>> extra{{"condition", e.condition()}};
    for (const auto& d : e.details()) extra.push_back(d);
    return fail(kCondition, "condition-violation", e.message(), extra);
  } catch (const std::invalid_argument& e) {
    return fail(kInvalidConfig, "invalid-argument", e.what());
  } catch (const std::exception& e) {
    return fail(kUsage, "runtime", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector-valued anisotropic estimate experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--out", out_dir, "Output directory, overrides output.dir");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a config file and list every problem");
  validate->add_option("config", validate_path, "Experiment config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return fail(kUsage, "usage", e.what());
  }

  if (*validate) {
    return guarded([&] {
      const auto diags = mrlab::driver::validate_config(mrlab::driver::load_json(validate_path));
      if (!diags.empty()) return report_diagnostics(diags);
      std::cout << "ok\n";
      return static_cast<int>(kOk);
    });
  }
  return guarded([&] {
    const auto cfg = mrlab::driver::parse_config(mrlab::driver::load_json(config_path));
    const std::filesystem::path dir = std::filesystem::path(out_dir.empty() ? cfg.out_dir : out_dir);
    const auto result = mrlab::driver::run_experiment(cfg, dir);
    for (const auto& f : result.files) std::cout << f.string() << '\n';
    return static_cast<int>(kOk);
  });
}
