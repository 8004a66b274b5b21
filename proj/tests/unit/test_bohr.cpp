#include <gtest/gtest.h>

#include "polytor/bohr.hpp"
#include "polytor/error.hpp"
#include "polytor/random.hpp"

namespace {

using polytor::DirichletPoly;
using polytor::MultiIndex;
using polytor::NormedSpace;
using polytor::Vector;

const NormedSpace kSpace = NormedSpace::euclidean(2);

TEST(Bohr, FactorizeSmallIntegers) {
  EXPECT_EQ(polytor::factorize(12, 2), (MultiIndex{2, 1}));
  EXPECT_EQ(polytor::factorize(1, 3).degree(), 0u);
  EXPECT_EQ(polytor::factorize(30, 3), (MultiIndex{1, 1, 1}));
}

TEST(Bohr, PrimeOutsideRangeIsNamed) {
  try {
    (void)polytor::factorize(14, 2);
    FAIL() << "expected an error";
  } catch (const polytor::Error& e) {
    EXPECT_EQ(e.kind(), polytor::ErrorKind::prime_out_of_table);
    EXPECT_NE(std::string(e.what()).find('7'), std::string::npos);
  }
}

TEST(Bohr, Omega) {
  EXPECT_EQ(polytor::omega(1), 0u);
  EXPECT_EQ(polytor::omega(12), 3u);
  EXPECT_EQ(polytor::omega(64), 6u);
  EXPECT_EQ(polytor::omega(999983), 1u);
}

TEST(Bohr, PrimeTableCounts) {
  const auto& t = polytor::PrimeTable::shared();
  EXPECT_EQ(t.count_up_to(1'000'000), 78498u);
  EXPECT_EQ(t.prime(0), 2u);
  EXPECT_EQ(t.index_of(13), std::optional<std::size_t>(5));
  EXPECT_FALSE(t.index_of(15).has_value());
}

TEST(Bohr, LiftOfSmallDirichletPolynomial) {
  const Vector x{1.0, 0.0};
  const Vector y{0.0, 1.0};
  const Vector w{2.0, -1.0};
  DirichletPoly d(kSpace);
  d.add_term(1, x);
  d.add_term(2, y);
  d.add_term(6, w);
  const auto p = polytor::bohr_lift(d, 2);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(*p.coefficient(MultiIndex{0, 0}), x);
  EXPECT_EQ(*p.coefficient(MultiIndex{1, 0}), y);
  EXPECT_EQ(*p.coefficient(MultiIndex{1, 1}), w);
  EXPECT_EQ(polytor::bohr_push(p), d);
}

TEST(Bohr, ConstantLift) {
  DirichletPoly d(kSpace);
  d.add_term(1, Vector{3.0, 4.0});
  const auto p = polytor::bohr_lift(d, 4);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.degree(), 0u);
}

TEST(BohrProperty, RoundTripAndDegreeOnRandomSupports) {
  polytor::Rng rng = polytor::make_stream(7, 0);
  const auto& table = polytor::PrimeTable::shared();
  const std::size_t n_primes = table.count_up_to(1'000'000);
  for (int i = 0; i < 500; ++i) {
    DirichletPoly d(kSpace);
    for (int t = 0; t < 8; ++t) d.add_term(1 + rng() % 1'000'000, polytor::gaussian_vector(2, rng));
    const auto p = polytor::bohr_lift(d, n_primes);
    EXPECT_EQ(polytor::bohr_push(p), d);
    for (const auto& [n, a] : d) {
      const auto alpha = polytor::factorize(n, n_primes);
      EXPECT_EQ(alpha.degree(), polytor::omega(n));
      ASSERT_NE(p.coefficient(alpha), nullptr);
    }
  }
}

}  // namespace
