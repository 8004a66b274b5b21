#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytor/harness/report.hpp"
#include "polytor/norms.hpp"

namespace polytor::harness {

/// Resource limits shared by every check of a run.
struct Budget {
  std::uint64_t max_grid_points = std::uint64_t{1} << 21;
  std::uint64_t mc_samples = 20'000;
  std::size_t cube_max_vars = 16;

  AutoNormOptions norm_options(std::uint64_t seed) const;
  nlohmann::json to_json() const;
  /// Missing fields keep their defaults. Throws Error(config) on wrong types.
  static Budget from_json(const nlohmann::json& j);
};

/// One configured check: a kind from the registry applied to one space.
struct CheckSpec {
  std::string name;
  std::string kind;
  NormedSpace space = NormedSpace::euclidean(1);
  nlohmann::json params = nlohmann::json::object();
  std::size_t instances = 10;
  std::uint64_t seed = 0;
};

struct CheckResult {
  /// Sorted by instance digest; reports of one instance keep their emission order.
  std::vector<InequalityReport> reports;
  std::vector<ConstantEstimate> constants;
};

/// Registered kinds, sorted.
std::vector<std::string> check_kinds();
bool is_check_kind(std::string_view kind);

/// Runs spec.instances instances of the kind. Instance i draws from make_stream(spec.seed, i), so the
/// result does not depend on jobs. Throws Error(config) for an unknown kind or invalid params;
/// an instance that exceeds a budget becomes an inconclusive skipped report.
CheckResult run_check(const CheckSpec& spec, const Budget& budget = {}, unsigned jobs = 1);

/// Typed entry points; each builds the CheckSpec and calls run_check.
CheckResult check_cotype_def(const NormedSpace& space, double q, std::size_t n, std::size_t instances,
                             std::uint64_t seed, const Budget& budget = {});
CheckResult check_hypercontractive_cotype(const NormedSpace& space, double q, std::uint32_t m, std::size_t n,
                                          std::optional<double> c_hyp, std::string_view mode, std::size_t instances,
                                          std::uint64_t seed, const Budget& budget = {});
CheckResult check_lemma1_bridge(const NormedSpace& space, double q, std::uint32_t m, std::size_t n,
                                std::size_t instances, std::uint64_t seed, const Budget& budget = {});
CheckResult check_hy_dirichlet_cotype(const NormedSpace& space, double q, double p, std::optional<double> r,
                                      std::size_t instances, std::uint64_t seed, const Budget& budget = {});
CheckResult check_corollary_delta(const NormedSpace& space, double q, double p, double delta, std::size_t instances,
                                  std::uint64_t seed, const Budget& budget = {});
CheckResult check_hy_dirichlet_type(const NormedSpace& space, double p, double q_out, std::optional<double> big_r,
                                    std::size_t instances, std::uint64_t seed, const Budget& budget = {});
CheckResult check_plconvexity(const NormedSpace& space, double q, std::size_t samples, std::uint64_t seed,
                              const Budget& budget = {});
CheckResult check_isenbeck(const NormedSpace& space, double q, double rho, std::size_t instances, std::uint64_t seed,
                           const Budget& budget = {});

}  // namespace polytor::harness
