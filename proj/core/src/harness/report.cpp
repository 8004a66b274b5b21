#include "polytor/harness/report.hpp"

#include <cmath>

#include "polytor/digest.hpp"

namespace polytor::harness {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::fail: return "fail";
  }
  return "unknown";
}

std::string instance_digest(const nlohmann::json& instance) { return sha256_hex(instance.dump()).substr(0, 16); }

InequalityReport make_report(std::string name, const NormEstimate& lhs, const NormEstimate& rhs, double constant,
                             int exponent_m, const nlohmann::json& instance, nlohmann::json params) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = constant;
  r.exponent_m = exponent_m;
  r.margin = constant * rhs.value - lhs.value;
  // Rounding slack alone never makes a report inconclusive; estimator error does.
  const double slack = 1e-12 * (std::abs(lhs.value) + std::abs(constant * rhs.value));
  r.combined_error = lhs.error_bound() + constant * rhs.error_bound() + slack;
  r.pass = r.margin + r.combined_error >= 0.0;
  r.verdict = r.margin + slack >= 0.0 ? Verdict::pass : (r.pass ? Verdict::inconclusive : Verdict::fail);
  r.instance_digest = instance_digest(instance);
  if (rhs.value > 0.0) params["ratio"] = lhs.value / rhs.value;
  r.params = std::move(params);
  return r;
}

InequalityReport exact_zero_report(std::string name, double count, const nlohmann::json& instance,
                                   nlohmann::json params) {
  return make_report(std::move(name), NormEstimate::exact_value(count), NormEstimate::exact_value(0.0), 1.0, 0,
                     instance, std::move(params));
}

InequalityReport skipped_report(std::string name, const nlohmann::json& instance, const std::string& reason) {
  InequalityReport r;
  r.name = std::move(name);
  r.pass = true;
  r.verdict = Verdict::inconclusive;
  r.instance_digest = instance_digest(instance);
  r.params = {{"skipped", reason}};
  return r;
}

nlohmann::json InequalityReport::to_json() const {
  return {{"name", name},
          {"lhs", lhs.to_json()},
          {"rhs", rhs.to_json()},
          {"constant", constant},
          {"exponent_m", exponent_m},
          {"margin", margin},
          {"combined_error", combined_error},
          {"pass", pass},
          {"verdict", to_string(verdict)},
          {"instance_digest", instance_digest},
          {"params", params}};
}

nlohmann::json ConstantEstimate::to_json() const {
  return {{"name", name},
          {"value", value},
          {"direction", direction == ConstantDirection::lower_bound ? "lower_bound" : "upper_witness"},
          {"search_budget", search_budget},
          {"seed", seed},
          {"witness", witness},
          {"params", params}};
}

}  // namespace polytor::harness
