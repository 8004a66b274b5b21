#include <gtest/gtest.h>

#include "polytor/combinatorics.hpp"
#include "polytor/error.hpp"

namespace {

TEST(Combinatorics, IdentityExamples) {
  const auto a = polytor::combinatorial_identity_check(2, 1, 1);
  EXPECT_EQ(a.count_lhs, 1u);
  EXPECT_EQ(a.count_rhs, 1u);
  const auto b = polytor::combinatorial_identity_check(4, 2, 2);
  EXPECT_EQ(b.count_lhs, 4u);
  EXPECT_EQ(b.count_rhs, 4u);
  EXPECT_TRUE(b.all_subsets_agree);
  const auto c = polytor::combinatorial_identity_check(4, 3, 3);
  EXPECT_EQ(c.count_lhs, 0u);
  EXPECT_EQ(c.count_rhs, 0u);
}

TEST(Combinatorics, IdentityHoldsForAllSmallCases) {
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= n; ++k) {
        const auto r = polytor::combinatorial_identity_check(n, m, k);
        EXPECT_EQ(r.count_lhs, r.count_rhs) << n << ' ' << m << ' ' << k;
        EXPECT_TRUE(r.all_subsets_agree);
      }
    }
  }
  EXPECT_THROW((void)polytor::combinatorial_identity_check(3, 4, 1), polytor::Error);
}

TEST(Combinatorics, StirlingRatioExamples) {
  EXPECT_EQ(polytor::stirling_ratio_exact(4, 2, 2), mpq_class(3, 2));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(polytor::stirling_ratio_exact(n, 1, n), mpq_class(1));
  EXPECT_THROW((void)polytor::stirling_ratio_exact(5, 2, 2), polytor::Error);
}

TEST(Combinatorics, StirlingRatioBand) {
  for (int m = 1; m <= 40; ++m) {
    for (int k = 1; k * m <= 40; ++k) {
      const double r = polytor::stirling_ratio(k * m, m, k);
      EXPECT_GE(r, 0.5);
      EXPECT_LE(r, 4.0);
    }
  }
}

TEST(Combinatorics, WeightedSumsAgree) {
  std::vector<long> values(1 << 6);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<long>((i * 37) % 11) - 5;
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= 6; ++k) {
      EXPECT_EQ(polytor::subset_triple_sum(6, m, k, values), polytor::subset_weighted_total(6, m, k, values));
    }
  }
}

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(polytor::binomial(10, 3), 120);
  EXPECT_EQ(polytor::binomial(3, 5), 0);
  EXPECT_EQ(polytor::binomial(60, 30), mpz_class("118264581564861424"));
}

}  // namespace
