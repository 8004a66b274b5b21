// Acceptance suite: runs the bundled config and judges each criterion from its reports.
// One PASS/FAIL line per criterion; exit status is nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polytor/harness/experiment.hpp"

namespace {

using polytor::harness::ExperimentResult;
using polytor::harness::InequalityReport;
using polytor::harness::Verdict;
using polytor::harness::glob_match;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> globs;
  double time_limit_s;  // <= 0: no limit
  /// Returns an empty string when every report satisfies the criterion, else the first problem.
  std::function<std::string(const std::vector<const InequalityReport*>&)> judge;
  /// Minimum number of reports the criterion must see.
  std::size_t min_reports;
};

bool matches(const std::vector<std::string>& globs, const std::string& name) {
  for (const auto& g : globs) {
    if (glob_match(g, name)) return true;
  }
  return false;
}

std::string describe(const InequalityReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s lhs=%.6g rhs=%.6g C=%.6g margin=%.3g err=%.3g (%s)", r.name.c_str(),
                r.lhs.value, r.rhs.value, r.constant, r.margin, r.combined_error,
                std::string(to_string(r.verdict)).c_str());
  return buf;
}

/// Exact criteria: every report must be a clean pass.
std::string all_exact(const std::vector<const InequalityReport*>& reports) {
  for (const auto* r : reports) {
    if (r->verdict != Verdict::pass) return describe(*r);
  }
  return {};
}

/// Estimator criteria: no report may violate its inequality beyond the combined error.
std::string no_violation(const std::vector<const InequalityReport*>& reports) {
  for (const auto* r : reports) {
    if (!r->pass) return describe(*r);
  }
  return {};
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string parseval_rule(const std::vector<const InequalityReport*>& reports) {
  std::size_t outside_plain = 0;
  std::size_t mc = 0;
  for (const auto* r : reports) {
    if (ends_with(r->name, "/grid") && r->verdict != Verdict::pass) return describe(*r);
    if (ends_with(r->name, "/mc")) {
      ++mc;
      // A fail means the deviation leaves the family-wise 99% band over all instances.
      if (r->verdict == Verdict::fail) return describe(*r);
      if (r->verdict == Verdict::inconclusive) ++outside_plain;
    }
  }
  std::printf("      mc: %zu of %zu instances outside the per-instance 99%% interval, all inside the family-wise 99%% band\n",
              outside_plain, mc);
  return {};
}

std::string degenerate_rule(const std::vector<const InequalityReport*>& reports) {
  for (const auto* r : reports) {
    if (r->name.rfind("rademacher_projection", 0) == 0) {
      if (!(r->lhs.value <= 1.0 + 1e-9)) return "projection norm above 1: " + describe(*r);
      continue;
    }
    if (r->lhs.value == 0.0 && r->rhs.value == 0.0) continue;
    const double ratio = r->lhs.value / r->rhs.value;
    if (!(std::abs(ratio - 1.0) <= 1e-6)) return "ratio off 1: " + describe(*r);
    if (r->constant != 1.0) return "constant is not 1: " + describe(*r);
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Bohr round-trip, 10^4 polys on [1..10^6]", {"bohr_roundtrip/c1"}, 10, all_exact, 10000},
      {2, "Hilbert inverse exact, biorthogonal, log-linear growth", {"hilbert_exactness/c2*"}, 5, all_exact, 15},
      {3, "lemma3_projection equals walsh_homog_filter", {"projection_oracle/c3"}, 30, all_exact, 200},
      {4, "Parseval triangulation: grid 1e-9, MC 99% CI", {"parseval_triangulation/c4*"}, 60, parseval_rule, 200},
      {5, "Tetrahedral/Walsh bridge within (1+sqrt2)^(+-m)", {"lemma1_bridge/c5*"}, 120, no_violation, 900},
      {6, "Kahane bounds, torus and Walsh", {"kahane/c6*", "walsh_kahane/c6*"}, 120, no_violation, 600},
      {7, "Euclidean q=2 degenerations", {"*/c7*"}, 30, degenerate_rule, 60},
      {8, "Dirichlet chain with Holder cross-check", {"*/c8*"}, 180, no_violation, 450},
      {9, "Combinatorial identity and Stirling ratios", {"combinatorics/c9*"}, 5, all_exact, 10},
  };

  const auto config = polytor::harness::load_config(POLYTOR_ACCEPTANCE_CONFIG);
  polytor::harness::RunOptions serial;
  serial.jobs = 1;
  const ExperimentResult first = polytor::harness::run_experiment(config, serial);

  int failed = 0;
  for (const auto& c : criteria) {
    std::vector<const InequalityReport*> reports;
    for (const auto& r : first.reports) {
      if (matches(c.globs, r.name)) reports.push_back(&r);
    }
    double seconds = 0.0;
    for (const auto& [name, t] : first.timings) {
      if (matches(c.globs, name)) seconds += t;
    }
    std::string problem;
    if (reports.size() < c.min_reports) {
      problem = "only " + std::to_string(reports.size()) + " reports, expected at least " + std::to_string(c.min_reports);
    } else {
      problem = c.judge(reports);
    }
    if (problem.empty() && c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      problem = "took " + std::to_string(seconds) + " s";
    }
    const bool ok = problem.empty();
    failed += ok ? 0 : 1;
    std::printf("%s [%d] %s: %zu reports, %.2f s (limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                reports.size(), seconds, c.time_limit_s, ok ? "" : " : ", problem.c_str());
    std::fflush(stdout);
  }

  polytor::harness::RunOptions parallel;
  parallel.jobs = 8;
  const ExperimentResult second = polytor::harness::run_experiment(config, parallel);
  const bool same = first.digest == second.digest;
  failed += same ? 0 : 1;
  std::printf("%s [10] Determinism, --jobs 1 vs --jobs 8: %s %s %s\n", same ? "PASS" : "FAIL", first.digest.c_str(),
              same ? "==" : "!=", second.digest.c_str());
  return failed == 0 ? 0 : 1;
}
