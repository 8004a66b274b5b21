#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polytor/error.hpp"
#include "polytor/harness/checks.hpp"
#include "polytor/harness/constants.hpp"
#include "polytor/harness/experiment.hpp"
#include "polytor/random.hpp"

namespace {

using namespace polytor::harness;
using polytor::NormEstimate;
using polytor::NormedSpace;
using polytor::Vector;

const NormedSpace kL1 = NormedSpace::ellp(1.0, 2);
const NormedSpace kLinf = NormedSpace::ellp(polytor::Exponent::infinity(), 2);
const NormedSpace kE2 = NormedSpace::euclidean(2);

Budget small_budget() {
  Budget b;
  b.max_grid_points = 1 << 16;
  return b;
}

std::size_t count(const CheckResult& r, Verdict v) {
  std::size_t n = 0;
  for (const auto& rep : r.reports) n += rep.verdict == v ? 1 : 0;
  return n;
}

TEST(Report, VerdictFromMarginAndError) {
  const auto exact = [](double v) { return NormEstimate::exact_value(v); };
  EXPECT_EQ(make_report("a", exact(1.0), exact(1.0), 1.0, 0, {}).verdict, Verdict::pass);
  EXPECT_EQ(make_report("a", exact(2.0), exact(1.0), 1.0, 0, {}).verdict, Verdict::fail);
  NormEstimate noisy = exact(1.05);
  noisy.error = polytor::EstimateError::ci;
  noisy.halfwidth = 0.1;
  const auto r = make_report("a", noisy, exact(1.0), 1.0, 0, {});
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.margin, -0.05, 1e-12);
}

TEST(Report, DigestIsStableAndShort) {
  const nlohmann::json inst = {{"a", 1}};
  EXPECT_EQ(instance_digest(inst), instance_digest(inst));
  EXPECT_EQ(instance_digest(inst).size(), 16u);
  EXPECT_NE(instance_digest(inst), instance_digest({{"a", 2}}));
}

TEST(Constants, CertifiedValues) {
  EXPECT_DOUBLE_EQ(certified_cotype_constant(kE2, 2.0), 1.0);
  EXPECT_NEAR(certified_cotype_constant(kL1, 2.0), std::numbers::sqrt2, 1e-12);
  EXPECT_THROW((void)certified_cotype_constant(kE2, 1.5), polytor::Error);
  EXPECT_THROW((void)certified_type_constant(kE2, 2.5), polytor::Error);
}

TEST(Constants, ChainClosures) {
  const auto c = cotype_chain(1.0, 2.0);
  EXPECT_DOUBLE_EQ(c.r, 0.5);
  EXPECT_NEAR(c.constant, std::sqrt(2.0), 1e-12);
  EXPECT_THROW((void)cotype_chain(1.0, 2.0, 1.5), polytor::Error);
  const auto t = type_chain(1.0, 1.0);
  EXPECT_DOUBLE_EQ(t.constant, 1.0);
  // p_1^{-delta} = 2^{-2} <= 0.5 already: no prime product needed.
  EXPECT_EQ(delta_factor(2.0, 0.5).k, 1u);
  EXPECT_DOUBLE_EQ(delta_factor(2.0, 0.5).factor, 1.0);
  const auto d = delta_factor(0.5, 0.5);
  EXPECT_EQ(d.k, 3u);
  EXPECT_GT(d.factor, 1.0);
}

TEST(Constants, CotypeRatioOracles) {
  polytor::AutoNormOptions opts;
  const std::vector<Vector> single{Vector{2.0, -1.0}};
  const auto one = cotype_ratio(kL1, single, 3.0, opts);
  EXPECT_NEAR(one.lhs.value / one.rhs.value, 1.0, 1e-12);
  const std::vector<Vector> basis{Vector{1.0, 0.0}, Vector{0.0, 1.0}};
  const auto r = cotype_ratio(kL1, basis, 2.0, opts);
  EXPECT_NEAR(r.lhs.value, std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(r.rhs.value, 2.0, 1e-9);
}

TEST(Constants, EstimatesAreReproducibleAndBounded) {
  const auto a = estimate_cotype_constant(kE2, 2.0, 3, 8, 5);
  EXPECT_NEAR(a.value, 1.0, 1e-6);
  const auto b = estimate_cotype_constant(kLinf, 2.0, 2, 8, 5);
  const auto c = estimate_cotype_constant(kLinf, 2.0, 2, 8, 5);
  EXPECT_EQ(b.value, c.value);
  EXPECT_GE(b.value, 1.0 - 1e-9);
  EXPECT_LE(b.value, certified_cotype_constant(kLinf, 2.0) + 1e-9);
  EXPECT_TRUE(b.witness.contains("vectors"));
  const auto t = estimate_type_constant(kL1, 1.5, 3, 8, 5);
  EXPECT_LE(t.value, certified_type_constant(kL1, 1.5) + 1e-9);
}

TEST(Constants, NormalQuantile) {
  EXPECT_NEAR(normal_quantile_two_sided(0.99), 2.5758293035489004, 1e-9);
  EXPECT_NEAR(normal_quantile_two_sided(0.95), 1.959963984540054, 1e-9);
}

TEST(Checks, RegistryAndConfigErrors) {
  EXPECT_TRUE(is_check_kind("lemma1_bridge"));
  EXPECT_FALSE(is_check_kind("nope"));
  CheckSpec s;
  s.name = s.kind = "cotype_def";
  s.params = {{"q", 1.5}};
  EXPECT_THROW((void)run_check(s), polytor::Error);
  s.kind = "nope";
  EXPECT_THROW((void)run_check(s), polytor::Error);
}

TEST(Checks, CotypeSingleVectorPassesWithRatioOne) {
  CheckSpec s;
  s.name = s.kind = "cotype_def";
  s.space = kLinf;
  s.params = {{"q", 2.0}, {"n", 1}, {"constant", 1.0}};
  s.instances = 8;
  s.seed = 3;
  const auto r = run_check(s, small_budget());
  for (const auto& rep : r.reports) EXPECT_NEAR(rep.lhs.value, rep.rhs.value, 1e-9 * rep.lhs.value);
}

TEST(Checks, HypercontractiveTetrahedralOnL1) {
  const auto r = check_hypercontractive_cotype(kL1, 2.0, 2, 3, std::nullopt, "tetrahedral", 12, 9, small_budget());
  EXPECT_EQ(count(r, Verdict::fail), 0u);
  EXPECT_EQ(r.reports.size(), 12u);
}

TEST(Checks, BridgeOnEuclideanStaysInBand) {
  const auto r = check_lemma1_bridge(kE2, 2.0, 2, 3, 12, 4, small_budget());
  EXPECT_EQ(count(r, Verdict::fail), 0u);
  for (const auto& rep : r.reports) {
    if (rep.name.ends_with("torus_upper")) {
      const double ratio = rep.lhs.value / rep.rhs.value;
      EXPECT_LE(ratio, std::pow(1 + std::numbers::sqrt2, rep.exponent_m) + 1e-9);
      EXPECT_GE(ratio, std::pow(1 + std::numbers::sqrt2, -rep.exponent_m) - 1e-9);
    }
  }
}

TEST(Checks, DirichletConstantTermIsTight) {
  CheckSpec s;
  s.name = s.kind = "hy_dirichlet_cotype";
  s.space = kL1;
  s.params = {{"q", 2.0}, {"p", 2.0}, {"support_max", 1}, {"terms", 1}};
  s.instances = 4;
  const auto r = run_check(s, small_budget());
  for (const auto& rep : r.reports) {
    if (rep.name == "hy_dirichlet_cotype") {
      EXPECT_NEAR(rep.lhs.value, rep.rhs.value, 1e-9 * rep.rhs.value);
    }
  }
  EXPECT_EQ(count(r, Verdict::fail), 0u);
}

TEST(Checks, DirichletChainsOnInfinityNorm) {
  EXPECT_EQ(count(check_hy_dirichlet_cotype(kLinf, 2.0, 2.0, std::nullopt, 8, 1, small_budget()), Verdict::fail), 0u);
  EXPECT_EQ(count(check_corollary_delta(kLinf, 2.0, 2.0, 1.0, 8, 1, small_budget()), Verdict::fail), 0u);
  EXPECT_EQ(count(check_hy_dirichlet_type(kLinf, 2.0, 2.0, std::nullopt, 8, 1, small_budget()), Verdict::fail), 0u);
}

TEST(Checks, PlConvexityOracles) {
  const auto e = check_plconvexity(kE2, 2.0, 16, 2, small_budget());
  ASSERT_EQ(e.constants.size(), 1u);
  EXPECT_NEAR(e.constants[0].value, 1.0, 1e-6);
  const auto l1 = check_plconvexity(kL1, 2.0, 16, 2, small_budget());
  EXPECT_GT(l1.constants[0].value, 0.0);
  EXPECT_TRUE(l1.constants[0].witness.contains("x"));
}

TEST(Checks, IsenbeckSearchRecordsRadiusAndHoldout) {
  CheckSpec s;
  s.name = s.kind = "isenbeck";
  s.space = kL1;
  s.params = {{"q", 2.0}, {"mode", "search"}, {"n_max", 2}, {"m_max", 2}};
  s.instances = 12;
  s.seed = 21;
  const auto r = run_check(s, small_budget());
  ASSERT_EQ(r.constants.size(), 1u);
  const auto& rho = r.constants[0];
  EXPECT_EQ(rho.name, "bohr_rho");
  EXPECT_GE(rho.value, 0.0);
  EXPECT_LE(rho.value, 1.0);
  EXPECT_DOUBLE_EQ(rho.params.at("holdout_rho").get<double>(), 0.9 * rho.value);
  ASSERT_EQ(r.reports.size(), 24u);
  for (const auto& rep : r.reports) EXPECT_EQ(rep.name.rfind("isenbeck/holdout", 0), 0u);
}

TEST(Checks, InfinityNormHasNoPositiveBohrRadius) {
  // P = e1 + e2 z has norm 1 everywhere on the circle, while the weighted coefficient side is
  // (1 + rho^2)^{1/2} > 1 for every rho > 0.
  polytor::VPoly p(kLinf, 1);
  p.add_term(polytor::MultiIndex{0}, Vector{1.0, 0.0});
  p.add_term(polytor::MultiIndex{1}, Vector{0.0, 1.0});
  EXPECT_NEAR(polytor::lq_norm_grid(p, 2.0, 16).value, 1.0, 1e-12);
  const double rhs = polytor::lq_norm_grid(p, 2.0, 16).value;
  for (double rho : {1e-3, 0.1, 0.5}) {
    double lhs = 0.0;
    for (const auto& [alpha, x] : p) lhs += std::pow(rho, 2.0 * alpha.degree()) * std::pow(kLinf.norm(x), 2.0);
    EXPECT_GT(std::sqrt(lhs), rhs) << rho;
  }
  const auto lambda = check_plconvexity(kLinf, 2.0, 32, 5, small_budget());
  EXPECT_LE(lambda.constants.at(0).value, 1.0);
}

TEST(Checks, DeterministicAcrossJobs) {
  CheckSpec s;
  s.name = s.kind = "kahane";
  s.space = kL1;
  s.instances = 10;
  s.seed = 77;
  const auto a = run_check(s, small_budget(), 1);
  const auto b = run_check(s, small_budget(), 4);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) EXPECT_EQ(a.reports[i].to_json(), b.reports[i].to_json());
}

TEST(Experiment, ParseErrorsCarryLineInfo) {
  try {
    (void)parse_config("{\n  \"checks\": [\n    {\"name\": }\n  ]\n}");
    FAIL() << "expected an error";
  } catch (const polytor::Error& e) {
    EXPECT_EQ(e.kind(), polytor::ErrorKind::config);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW((void)parse_config(R"({"checks":[{"name":"unknown_kind"}]})"), polytor::Error);
}

TEST(Experiment, KindFromNamePrefix) {
  const auto c = parse_config(R"({"checks":[{"name":"lemma1_bridge/a"},{"name":"x","check":"kahane"}]})");
  ASSERT_EQ(c.checks.size(), 2u);
  EXPECT_EQ(c.checks[0].spec.kind, "lemma1_bridge");
  EXPECT_EQ(c.checks[1].spec.kind, "kahane");
  EXPECT_EQ(c.checks[0].spec.instances, 10u);
}

TEST(Experiment, EmptyCheckListPasses) {
  const auto r = run_experiment(parse_config(R"({"checks":[]})"));
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_TRUE(r.reports.empty());
}

TEST(Experiment, SeedPrecedence) {
  ConfiguredCheck c;
  c.spec.name = "k";
  EXPECT_EQ(resolve_seed(c, 5, std::nullopt), polytor::derive_seed(5, "k"));
  c.has_seed = true;
  c.spec.seed = 9;
  EXPECT_EQ(resolve_seed(c, 5, std::nullopt), 9u);
  EXPECT_EQ(resolve_seed(c, 5, 100), polytor::derive_seed(100, "k"));
}

TEST(Experiment, DigestIgnoresJobsAndTimestamp) {
  const auto config = parse_config(
      R"({"seed": 4, "checks":[{"name":"walsh_kahane/t","instances":6},{"name":"combinatorics/t","params":{"n_max":4,"km_max":8}}]})");
  RunOptions one;
  RunOptions four;
  four.jobs = 4;
  const auto a = run_experiment(config, one);
  const auto b = run_experiment(config, four);
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_EQ(a.results_json("t0")["payload"], b.results_json("t1")["payload"]);
  EXPECT_EQ(a.summary_csv(), b.summary_csv());
  RunOptions other_seed;
  other_seed.seed_override = 99;
  EXPECT_NE(run_experiment(config, other_seed).digest, a.digest);
}

TEST(Experiment, GlobMatch) {
  EXPECT_TRUE(glob_match("lemma1*", "lemma1_bridge/c5/l1/q1"));
  EXPECT_FALSE(glob_match("lemma1*", "kahane/c6"));
  EXPECT_TRUE(glob_match("*/c?", "kahane/c6"));
  EXPECT_TRUE(glob_match("", ""));
  EXPECT_FALSE(glob_match("a?c", "ac"));
}

}  // namespace
