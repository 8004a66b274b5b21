#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polytor/error.hpp"
#include "polytor/harness/instances.hpp"
#include "polytor/norms.hpp"
#include "polytor/random.hpp"

namespace {

using polytor::Complex;
using polytor::MultiIndex;
using polytor::NormedSpace;
using polytor::SubsetIndex;
using polytor::Vector;
using polytor::VPoly;
using polytor::WalshPoly;

const NormedSpace kScalar = NormedSpace::euclidean(1);
const NormedSpace kE2 = NormedSpace::euclidean(2);

TEST(Eval, ConstantAndLinear) {
  VPoly c(kE2, 1);
  c.add_term(MultiIndex{0}, Vector{1.0, 2.0});
  EXPECT_EQ(polytor::evaluate(c, std::vector<Complex>{Complex(0.3, 0.1)}), (Vector{1.0, 2.0}));
  VPoly l(kE2, 1);
  l.add_term(MultiIndex{1}, Vector{1.0, 2.0});
  EXPECT_EQ(polytor::eval_at(l, std::vector<Complex>{-1.0}), (Vector{-1.0, -2.0}));
}

TEST(Eval, ImaginaryUnitExample) {
  VPoly p(kE2, 2);
  const Vector x{1.0, Complex(0, 2)};
  p.add_term(MultiIndex{1, 2}, x);
  const std::vector<Complex> z{Complex(0, 1), Complex(0, 1)};
  const Vector v = polytor::eval_at(p, z);
  const Vector expected = Complex(0, -1) * x;
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(std::abs(v[i] - expected[i]), 0.0, 1e-15);
  EXPECT_THROW((void)polytor::eval_at(p, std::vector<Complex>{2.0, 1.0}), polytor::Error);
}

TEST(Parseval, OrthogonalTerms) {
  VPoly p(kE2, 2);
  p.add_term(MultiIndex{1, 0}, Vector{3.0, 0.0});
  p.add_term(MultiIndex{0, 1}, Vector{0.0, 4.0});
  EXPECT_DOUBLE_EQ(polytor::l2_parseval(p).value, 5.0);
  try {
    VPoly q(NormedSpace::ellp(1.0, 2), 1);
    (void)polytor::l2_parseval(q);
    FAIL() << "expected an error";
  } catch (const polytor::Error& e) {
    EXPECT_EQ(e.kind(), polytor::ErrorKind::not_euclidean);
  }
}

TEST(Grid, ConstantIntegrandIsExact) {
  VPoly p(NormedSpace::ellp(1.0, 2), 1);
  p.add_term(MultiIndex{1}, Vector{3.0, 4.0});
  for (double q : {1.0, 2.0, 3.0}) EXPECT_NEAR(polytor::lq_norm_grid(p, q, 2).value, 7.0, 1e-12);
}

TEST(Grid, FourthMomentOfTwoVariables) {
  // E|z1 + z2|^4 = 6 for independent Steinhaus variables.
  VPoly p(kScalar, 2);
  p.add_term(MultiIndex{1, 0}, Vector{1.0});
  p.add_term(MultiIndex{0, 1}, Vector{1.0});
  const auto est = polytor::lq_norm_grid(p, 4.0, 8);
  EXPECT_NEAR(est.value, std::pow(6.0, 0.25), 1e-12);
  EXPECT_EQ(est.error, polytor::EstimateError::exact);
}

TEST(Grid, BudgetGuard) {
  VPoly p(kScalar, 6);
  p.add_term(MultiIndex{1, 1, 1, 1, 1, 1}, Vector{1.0});
  try {
    (void)polytor::lq_norm_grid(p, 3.0, 100);
    FAIL() << "expected an error";
  } catch (const polytor::Error& e) {
    EXPECT_EQ(e.kind(), polytor::ErrorKind::budget_exceeded);
  }
}

TEST(MonteCarlo, ConstantHasZeroWidthAndSeedReproduces) {
  VPoly c(kE2, 1);
  c.add_term(MultiIndex{0}, Vector{3.0, 4.0});
  polytor::SamplerSpec spec;
  spec.seed = 42;
  spec.samples = 1000;
  const auto e = polytor::lq_norm_mc(c, 3.0, spec);
  EXPECT_NEAR(e.value, 5.0, 1e-12);
  EXPECT_LT(e.halfwidth, 1e-9);

  VPoly p(kE2, 2);
  p.add_term(MultiIndex{1, 0}, Vector{1.0, 0.0});
  p.add_term(MultiIndex{0, 1}, Vector{1.0, 1.0});
  EXPECT_EQ(polytor::lq_norm_mc(p, 3.0, spec).value, polytor::lq_norm_mc(p, 3.0, spec).value);
}

TEST(Cube, SmallExamples) {
  const Vector x{3.0, 4.0};
  WalshPoly w(kE2, 1);
  w.add_term(SubsetIndex{1}, x);
  for (double q : {1.0, 2.0, 4.0}) EXPECT_NEAR(polytor::cube_lq_exact(w, q).value, 5.0, 1e-12);
  WalshPoly two(kE2, 2);
  two.add_term(SubsetIndex{1}, x);
  two.add_term(SubsetIndex{2}, x);
  EXPECT_NEAR(polytor::cube_lq_exact(two, 2.0).value, std::numbers::sqrt2 * 5.0, 1e-12);
  WalshPoly s(kScalar, 2);
  s.add_term(SubsetIndex{1}, Vector{1.0});
  s.add_term(SubsetIndex{2}, Vector{1.0});
  EXPECT_NEAR(polytor::cube_lq_exact(s, 1.0).value, 1.0, 1e-15);
}

TEST(Cube, FwhtAgreesWithGrayWalk) {
  polytor::Rng rng = polytor::make_stream(8, 0);
  for (int i = 0; i < 20; ++i) {
    const auto w = polytor::harness::random_walsh(NormedSpace::ellp(1.0, 2), 7, 4, false,
                                                  polytor::harness::kind_for(i), rng);
    const auto a = polytor::cube_norms(w, true);
    const auto b = polytor::cube_norms(w, false);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-12 * (1 + a[k]));
  }
}

TEST(Sup, SingleVariableOnTorus) {
  VPoly p(kScalar, 1);
  p.add_term(MultiIndex{1}, Vector{1.0});
  EXPECT_NEAR(polytor::sup_grid(p, 16, polytor::SupDomain::torus).value, 1.0, 1e-15);
}

TEST(NormsProperty, GridMatchesParsevalAboveTwiceDegree) {
  polytor::Rng rng = polytor::make_stream(9, 0);
  for (int i = 0; i < 60; ++i) {
    const auto p = polytor::harness::random_vpoly(NormedSpace::euclidean(3), 3, 3, false, false,
                                                  polytor::harness::kind_for(i), rng);
    const std::uint32_t m = 2 * std::max<std::uint32_t>(1, p.max_variable_degree()) + 1;
    EXPECT_NEAR(polytor::lq_norm_grid(p, 2.0, m).value, polytor::l2_parseval(p).value, 1e-9);
  }
}

TEST(NormsProperty, RotationInvariance) {
  // Substituting z_j -> w_j z_j with |w_j| = 1 preserves every torus norm. Rotations by M-th roots
  // of unity permute the M-point grid, so the grid estimates must agree to rounding.
  constexpr std::uint32_t kM = 24;
  polytor::Rng rng = polytor::make_stream(10, 0);
  for (int i = 0; i < 30; ++i) {
    const auto p = polytor::harness::random_vpoly(NormedSpace::ellp(1.0, 2), 2, 3, false, false,
                                                  polytor::harness::InstanceKind::generic, rng);
    std::vector<Complex> w;
    for (int j = 0; j < 2; ++j) w.push_back(std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(rng() % kM) / kM));
    VPoly rotated(p.space(), p.n_vars());
    for (const auto& [alpha, x] : p) {
      Complex f = 1.0;
      for (const auto& [var, e] : alpha.support()) f *= std::pow(w[var], static_cast<double>(e));
      rotated.add_term(alpha, f * x);
    }
    const double a = polytor::lq_norm_grid(p, 3.0, kM).value;
    const double b = polytor::lq_norm_grid(rotated, 3.0, kM).value;
    EXPECT_NEAR(a, b, 1e-12 * a);
  }
}

TEST(NormsProperty, MonotoneInExponent) {
  polytor::Rng rng = polytor::make_stream(12, 0);
  for (int i = 0; i < 30; ++i) {
    const auto w = polytor::harness::random_walsh(NormedSpace::ellp(3.0, 2), 5, 3, false,
                                                  polytor::harness::kind_for(i), rng);
    const auto norms = polytor::cube_norms(w);
    EXPECT_LE(polytor::power_mean(norms, 1.0), polytor::power_mean(norms, 2.0) * (1 + 1e-12));
    EXPECT_LE(polytor::power_mean(norms, 2.0), polytor::power_mean(norms, 4.0) * (1 + 1e-12));
  }
}

}  // namespace
