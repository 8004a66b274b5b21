#include <gtest/gtest.h>

#include <cmath>

#include "polytor/error.hpp"
#include "polytor/random.hpp"
#include "polytor/spaces.hpp"

namespace {

using polytor::Complex;
using polytor::Exponent;
using polytor::NormedSpace;
using polytor::Vector;

TEST(Spaces, EllpNormsOfSmallVectors) {
  EXPECT_DOUBLE_EQ(NormedSpace::ellp(1.0, 2).norm(Vector{3.0, 4.0}), 7.0);
  EXPECT_DOUBLE_EQ(NormedSpace::ellp(2.0, 2).norm(Vector{3.0, 4.0}), 5.0);
  EXPECT_DOUBLE_EQ(NormedSpace::ellp(Exponent::infinity(), 3).norm(Vector{1.0, -2.0, 0.5}), 2.0);
}

TEST(Spaces, EuclideanEqualsEllTwo) {
  const Vector v{Complex(1, 2), Complex(-3, 0.5)};
  EXPECT_NEAR(NormedSpace::euclidean(2).norm(v), NormedSpace::ellp(2.0, 2).norm(v), 1e-15);
  EXPECT_TRUE(NormedSpace::euclidean(2).is_hilbert());
  EXPECT_TRUE(NormedSpace::ellp(2.0, 2).is_hilbert());
  EXPECT_FALSE(NormedSpace::ellp(1.0, 2).is_hilbert());
}

TEST(Spaces, DimensionMismatchIsStructured) {
  try {
    (void)NormedSpace::ellp(1.0, 2).norm(Vector{1.0, 2.0, 3.0});
    FAIL() << "expected an error";
  } catch (const polytor::Error& e) {
    EXPECT_EQ(e.kind(), polytor::ErrorKind::dimension_mismatch);
  }
}

TEST(Spaces, ConjugateExponent) {
  EXPECT_DOUBLE_EQ(polytor::conjugate_exponent(2.0).value(), 2.0);
  EXPECT_NEAR(polytor::conjugate_exponent(4.0 / 3.0).value(), 4.0, 1e-12);
  EXPECT_TRUE(polytor::conjugate_exponent(1.0).is_infinite());
  EXPECT_DOUBLE_EQ(polytor::conjugate_exponent(Exponent::infinity()).value(), 1.0);
  EXPECT_THROW((void)polytor::conjugate_exponent(0.5), polytor::Error);
}

TEST(Spaces, JsonRoundTrip) {
  for (const auto& s : {NormedSpace::ellp(1.0, 2), NormedSpace::euclidean(3), NormedSpace::ellp(Exponent::infinity(), 2),
                        NormedSpace::ellp(3.5, 4)}) {
    EXPECT_EQ(NormedSpace::from_json(s.to_json()), s) << s.to_json().dump();
  }
  EXPECT_THROW(NormedSpace::from_json({{"family", "hilbert"}, {"dim", 2}}), polytor::Error);
  EXPECT_THROW(NormedSpace::from_json({{"family", "ellp"}, {"p", 0.5}, {"dim", 2}}), polytor::Error);
}

TEST(SpacesProperty, NormAxiomsOnRandomVectors) {
  polytor::Rng rng = polytor::make_stream(11, 0);
  for (const auto& s : {NormedSpace::ellp(1.0, 3), NormedSpace::ellp(1.5, 3), NormedSpace::euclidean(3),
                        NormedSpace::ellp(Exponent::infinity(), 3)}) {
    for (int i = 0; i < 200; ++i) {
      const Vector x = polytor::gaussian_vector(3, rng);
      const Vector y = polytor::gaussian_vector(3, rng);
      const Complex a = polytor::complex_gaussian(rng);
      EXPECT_LE(s.norm(x + y), s.norm(x) + s.norm(y) + 1e-12);
      EXPECT_NEAR(s.norm(a * x), std::abs(a) * s.norm(x), 1e-12 * (1 + s.norm(x)));
      // Distortion bounds relative to the Euclidean norm.
      const auto d = s.distortion();
      ASSERT_TRUE(d.has_value());
      const double e = NormedSpace::euclidean(3).norm(x);
      EXPECT_LE(s.norm(x), d->upper * e * (1 + 1e-12));
      EXPECT_LE(e, d->lower * s.norm(x) * (1 + 1e-12));
    }
  }
}

}  // namespace
