#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace polytor::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

struct RunConfig {
  std::filesystem::path config_path;
  /// Highest-precedence seed; falls back to POLYTOR_SEED, then to the config.
  std::optional<std::uint64_t> seed_override;
  std::filesystem::path output_dir = "polytor-out";
  std::string filter;
  unsigned jobs = 1;
  std::optional<std::uint64_t> max_grid_points;
  std::optional<std::uint64_t> mc_samples;
};

/// Seed from the POLYTOR_SEED environment variable. Throws std::invalid_argument when it is set
/// but not a nonnegative integer.
std::optional<std::uint64_t> env_seed();

/// Runs the config and writes results.json and summary.csv. Exit 0 all pass, 1 any fail, 2 config or IO error.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct ConstantsConfig {
  /// JSON space descriptor, e.g. {"family":"ellp","p":1,"dim":2}.
  std::string space_json;
  /// Exactly one of q (cotype) and p (type) is set.
  std::optional<double> q;
  std::optional<double> p;
  /// Number of random families searched.
  std::size_t budget = 64;
  std::size_t n = 3;
  std::optional<std::uint64_t> seed;
};

/// Prints the ConstantEstimate as JSON. Exit 2 for q < 2, p outside [1, 2] or a bad space.
int cmd_constants(const ConstantsConfig& config, std::ostream& out, std::ostream& err);

/// Writes hilbert_growth.csv, stirling_ratios.csv and kahane_ratios.csv.
int cmd_tables(const std::filesystem::path& output_dir, std::ostream& out, std::ostream& err);

}  // namespace polytor::cli
