#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytor/harness/checks.hpp"

namespace polytor::harness {

/// One parsed config entry. Kind is the "check" field, or else the name up to the first '/'.
struct ConfiguredCheck {
  CheckSpec spec;
  /// False when the entry gave no seed; the run then derives one from the config seed and name.
  bool has_seed = false;
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  Budget budget;
  std::vector<ConfiguredCheck> checks;

  nlohmann::json to_json() const;
};

/// Throws Error(config); JSON syntax errors carry "line L, column C".
ExperimentConfig parse_config(std::string_view text);
/// Throws Error(config) when the file cannot be read.
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunOptions {
  /// Replaces every check seed with derive_seed(seed_override, name).
  std::optional<std::uint64_t> seed_override;
  unsigned jobs = 1;
  /// Glob over check names ('*', '?'); empty runs everything.
  std::string filter;
};

struct ExperimentResult {
  /// Everything that is digested: resolved config, reports, constants, counts. Never contains jobs
  /// or the timestamp.
  nlohmann::json payload;
  /// SHA-256 hex of payload.dump().
  std::string digest;
  std::vector<InequalityReport> reports;
  std::vector<ConstantEstimate> constants;
  std::size_t failures = 0;
  std::size_t inconclusive = 0;
  /// Wall-clock seconds per executed check, in run order. Not digested.
  std::vector<std::pair<std::string, double>> timings;

  /// 0 when no report failed, 1 otherwise.
  int exit_code() const noexcept { return failures == 0 ? 0 : 1; }
  /// {"digest", "timestamp", "payload"}.
  nlohmann::json results_json(std::string_view timestamp) const;
  /// Header name,lhs,rhs,constant,margin,pass; pass holds the verdict.
  std::string summary_csv() const;
};

/// Seed a check runs with under the given override.
std::uint64_t resolve_seed(const ConfiguredCheck& check, std::uint64_t config_seed,
                           std::optional<std::uint64_t> seed_override);

/// Runs the checks in config order. Throws Error(config) for invalid check params.
ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Writes results.json and summary.csv into dir (created if missing). Throws Error(config) on IO failure.
void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir);

/// Shell-style match with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text) noexcept;

/// UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace polytor::harness
