#include <gtest/gtest.h>

#include "polytor/error.hpp"
#include "polytor/harness/instances.hpp"
#include "polytor/parity.hpp"
#include "polytor/polynomial.hpp"
#include "polytor/random.hpp"

namespace {

using polytor::MultiIndex;
using polytor::NormedSpace;
using polytor::SubsetIndex;
using polytor::Vector;
using polytor::VPoly;
using polytor::WalshPoly;

const NormedSpace kSpace = NormedSpace::euclidean(2);
const Vector kX{1.0, 2.0};
const Vector kY{-3.0, 0.5};

TEST(MultiIndex, SparseStorageAndDegree) {
  const MultiIndex a{2, 0, 1};
  EXPECT_EQ(a.n_vars(), 3u);
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(a[0], 2u);
  EXPECT_EQ(a[1], 0u);
  EXPECT_EQ(a.support().size(), 2u);
  EXPECT_FALSE(a.is_tetrahedral());
  EXPECT_TRUE((MultiIndex{1, 1, 0}).is_tetrahedral());
}

TEST(Poly, HomogeneousPartFiltersOneDegree) {
  VPoly p(kSpace, 2);
  p.add_term(MultiIndex{1, 0}, kX);
  p.add_term(MultiIndex{1, 1}, kY);
  const VPoly part = polytor::homogeneous_part(p, 1);
  ASSERT_EQ(part.size(), 1u);
  EXPECT_EQ(*part.coefficient(MultiIndex{1, 0}), kX);
  EXPECT_TRUE(polytor::homogeneous_part(p, 5).empty());
}

TEST(Poly, TetrahedralPredicate) {
  VPoly a(kSpace, 2);
  a.add_term(MultiIndex{1, 1}, kX);
  EXPECT_TRUE(polytor::is_tetrahedral(a));
  VPoly b(kSpace, 1);
  b.add_term(MultiIndex{2}, kX);
  EXPECT_FALSE(polytor::is_tetrahedral(b));
  VPoly c(kSpace, 1);
  c.add_term(MultiIndex{0}, kX);
  EXPECT_TRUE(polytor::is_tetrahedral(c));
  EXPECT_THROW((void)polytor::tetra_to_walsh(b), polytor::Error);
}

TEST(Poly, TetraWalshRoundTrip) {
  polytor::Rng rng = polytor::make_stream(5, 0);
  for (int i = 0; i < 50; ++i) {
    const VPoly p = polytor::harness::random_vpoly(kSpace, 4, 3, false, true, polytor::harness::kind_for(i), rng);
    const WalshPoly w = polytor::tetra_to_walsh(p);
    EXPECT_EQ(polytor::walsh_to_tetra(w), p);
    EXPECT_EQ(w.degree(), p.degree());
  }
}

TEST(Poly, JsonRoundTrip) {
  VPoly p(kSpace, 3);
  p.add_term(MultiIndex{1, 0, 2}, kX);
  p.add_term(MultiIndex{0, 0, 0}, kY);
  EXPECT_EQ(VPoly::from_json(p.to_json(), kSpace), p);
  WalshPoly w(kSpace, 3);
  w.add_term(SubsetIndex{1, 3}, kX);
  EXPECT_EQ(WalshPoly::from_json(w.to_json(), kSpace), w);
  polytor::DirichletPoly d(kSpace);
  d.add_term(12, kX);
  d.add_term(1, kY);
  EXPECT_EQ(polytor::DirichletPoly::from_json(d.to_json(), kSpace), d);
}

TEST(Parity, EvenExponentsGiveEmptyOddSet) {
  VPoly p(kSpace, 1);
  p.add_term(MultiIndex{2}, kX);
  const auto dec = polytor::parity_decompose(p);
  ASSERT_EQ(dec.assignments().size(), 1u);
  const auto& t = dec.assignments()[0];
  EXPECT_TRUE(t.odd_set.empty());
  EXPECT_EQ(t.k, 0u);
  EXPECT_EQ(t.l, 0u);
  EXPECT_EQ(t.beta, MultiIndex{1});
  EXPECT_EQ(t.gamma.degree(), 0u);
  EXPECT_EQ(dec.flatten(), p);
}

TEST(Parity, OddExponentsGiveFullOddSet) {
  VPoly p(kSpace, 2);
  p.add_term(MultiIndex{1, 1}, kX);
  const auto dec = polytor::parity_decompose(p);
  const auto& t = dec.assignments()[0];
  EXPECT_EQ(t.odd_set, (SubsetIndex{1, 2}));
  EXPECT_EQ(t.k, 1u);
  EXPECT_EQ(t.l, 1u);
  EXPECT_EQ(t.beta.degree(), 0u);
  EXPECT_EQ(t.gamma.degree(), 0u);
}

TEST(Parity, MixedDegreeFourExample) {
  VPoly p(kSpace, 2);
  p.add_term(MultiIndex{3, 1}, kX);
  p.add_term(MultiIndex{2, 2}, kY);
  const auto dec = polytor::parity_decompose(p);
  ASSERT_EQ(dec.assignments().size(), 2u);
  for (const auto& t : dec.assignments()) {
    if (t.alpha == MultiIndex{3, 1}) {
      EXPECT_EQ(t.odd_set, (SubsetIndex{1, 2}));
      EXPECT_EQ(t.gamma, (MultiIndex{1, 0}));
      EXPECT_EQ(t.beta.degree(), 0u);
      EXPECT_EQ(t.l, 2u);
    } else {
      EXPECT_TRUE(t.odd_set.empty());
      EXPECT_EQ(t.beta, (MultiIndex{1, 1}));
      EXPECT_EQ(t.l, 0u);
    }
  }
}

TEST(Parity, NonHomogeneousIsRejected) {
  VPoly p(kSpace, 1);
  p.add_term(MultiIndex{1}, kX);
  p.add_term(MultiIndex{2}, kY);
  try {
    (void)polytor::parity_decompose(p);
    FAIL() << "expected an error";
  } catch (const polytor::Error& e) {
    EXPECT_EQ(e.kind(), polytor::ErrorKind::not_homogeneous);
  }
}

TEST(ParityProperty, FlattenAndReassembleAreExact) {
  polytor::Rng rng = polytor::make_stream(6, 0);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(i % 5);
    const VPoly p = polytor::harness::random_vpoly(kSpace, 3, m, true, false, polytor::harness::kind_for(i), rng);
    const auto dec = polytor::parity_decompose(p);
    EXPECT_EQ(dec.flatten(), p);
    for (const auto& t : dec.assignments()) {
      EXPECT_EQ(polytor::reassemble(t), t.alpha);
      EXPECT_EQ(t.odd_set.size(), 2 * t.k + m % 2);
    }
  }
}

}  // namespace
