#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "polytor/norms.hpp"

namespace polytor::harness {

enum class Verdict { pass, inconclusive, fail };

std::string_view to_string(Verdict verdict) noexcept;

/// One tested instance of lhs <= constant·rhs.
struct InequalityReport {
  std::string name;
  NormEstimate lhs;
  NormEstimate rhs;
  double constant = 1.0;
  int exponent_m = 0;
  /// constant·rhs − lhs.
  double margin = 0.0;
  /// lhs error + constant·(rhs error) + float slack.
  double combined_error = 0.0;
  /// margin + combined_error >= 0.
  bool pass = false;
  /// pass when margin clears the rounding slack, inconclusive when only the estimator error bars
  /// reach, fail otherwise.
  Verdict verdict = Verdict::fail;
  /// First 16 hex digits of SHA-256 over the instance JSON.
  std::string instance_digest;
  nlohmann::json params = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// Builds a report and derives margin, error, pass and verdict.
InequalityReport make_report(std::string name, const NormEstimate& lhs, const NormEstimate& rhs, double constant,
                             int exponent_m, const nlohmann::json& instance, nlohmann::json params = nlohmann::json::object());

/// Report for a quantity that must vanish: lhs = count (exact), rhs = 0.
InequalityReport exact_zero_report(std::string name, double count, const nlohmann::json& instance,
                                   nlohmann::json params = nlohmann::json::object());

/// A report that could not be evaluated; always inconclusive.
InequalityReport skipped_report(std::string name, const nlohmann::json& instance, const std::string& reason);

std::string instance_digest(const nlohmann::json& instance);

enum class ConstantDirection { lower_bound, upper_witness };

struct ConstantEstimate {
  /// cotype_C_q, type_T_p, empirical_kahane, bohr_rho or plconvex_lambda.
  std::string name;
  double value = 0.0;
  ConstantDirection direction = ConstantDirection::lower_bound;
  std::uint64_t search_budget = 0;
  std::uint64_t seed = 0;
  /// Instance attaining value.
  nlohmann::json witness;
  nlohmann::json params = nlohmann::json::object();

  nlohmann::json to_json() const;
};

}  // namespace polytor::harness
