#include <gtest/gtest.h>

#include "pluricalc/error.hpp"
#include "pluricalc/toric3.hpp"

using namespace pluricalc;

TEST(Toric, RaysAndCones) {
  EXPECT_THROW(Ray(0, 0, 0), FanError);
  EXPECT_THROW(Ray(2, 4, 0), FanError);
  const Cone3 smooth({Ray(1, 0, 0), Ray(0, 1, 0), Ray(0, 0, 1)});
  EXPECT_EQ(cone_mult(smooth), 1);
  EXPECT_EQ(cone_mult(Cone3({Ray(1, 0, 0), Ray(1, 2, 0)})), 2);
}

TEST(Toric, QuotientTypeOfSimplex) {
  // Cone(e1, e2, e1 + e2 + 5 e3)-ish: 1/5(1,1,3) up to units
  const Cone3 c({Ray(1, 0, 0), Ray(0, 1, 0), Ray(1, 1, 5)});
  const auto t = quotient_type(c);
  EXPECT_EQ(t.order, 5);
  EXPECT_TRUE(t.cyclic);
  EXPECT_EQ(t.canonical, (std::vector<BigInt>{1, 1, 4}));
  EXPECT_EQ(canonical_weights({2, 2, 3}, 5), (std::vector<BigInt>{1, 1, 4}));
}

TEST(Toric, StarSubdivisionOfSmoothCone) {
  const Fan3D f({Cone3({Ray(1, 0, 0), Ray(0, 1, 0), Ray(0, 0, 1)})});
  const auto g = star_subdivide(f, Ray(1, 1, 1));
  EXPECT_EQ(g.cones.size(), 3u);
  EXPECT_EQ(g.rays().size(), 4u);
  EXPECT_EQ(subdivision_discrepancy(f, Ray(1, 1, 1), f.cones[0]), 2);
  EXPECT_THROW(star_subdivide(f, Ray(-1, 0, 0)), FanError);
}

TEST(Toric, Fixture952) {
  const auto r = floored_pullback_check({9, 5, 2}, 1);
  const auto& v = r.r_sigma2.values;
  EXPECT_EQ(v.at(Ray(9, 1, -2)), Rational(1, 9));
  EXPECT_EQ(v.at(Ray(-5, 2, 1)), Rational(1, 5));
  EXPECT_EQ(v.at(Ray(0, 0, 1)), Rational(1, 45));
  EXPECT_EQ(v.at(Ray(0, 1, 0)), Rational(-23, 45));
  // -sum D.R = 2/n - b/m
  EXPECT_EQ(r.r_sigma2.k_dot, Rational(2, 5) - Rational(2, 9));
  EXPECT_EQ(r.r_sigma2.k_dot, Rational(8, 45));
  EXPECT_EQ(r.floored_value, Rational(-3, 5));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.negative());
  EXPECT_EQ(r.sigma1_type.order, 23);
  EXPECT_EQ(r.sigma1_type.canonical, (std::vector<BigInt>{1, 5, 9}));
  for (const auto& x : r.r_sigma3.residual) EXPECT_TRUE(x.is_zero());
}

TEST(Toric, ClosedFormSweepSmall) {
  for (std::int64_t n = 1; n <= 21; n += 2)
    for (std::int64_t b = 1; b <= 21; ++b) {
      const std::int64_t m = n * b - 1;
      if (m < 2) continue;
      for (std::int64_t m0 = 0; m0 <= 6; ++m0) {
        const auto r = floored_pullback_check({m, n, b}, m0, false);
        EXPECT_TRUE(r.equal) << m << "," << n << "," << b << "," << m0;
      }
    }
}

TEST(Toric, ParamValidation) {
  EXPECT_FALSE((ToricParams{9, 4, 2}.violations().empty()));
  EXPECT_FALSE((ToricParams{8, 5, 2}.violations().empty()));
  EXPECT_TRUE((ToricParams{9, 5, 2}.violations().empty()));
}
