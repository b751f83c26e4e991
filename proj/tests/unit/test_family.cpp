#include <gtest/gtest.h>

#include "pluricalc/error.hpp"
#include "pluricalc/family.hpp"
#include "pluricalc/singularity.hpp"
#include "pluricalc/zariski.hpp"

using namespace pluricalc;

TEST(Family, Instance42) {
  const auto f = build_family(4, 2);
  EXPECT_EQ(f.d, 176);
  EXPECT_EQ(f.ambient_weights, (std::array<std::int64_t, 4>{1, 1, 8, 25}));
  EXPECT_EQ(f.o_type, CyclicQuotientType(25, 8));
  EXPECT_EQ(f.o1_graph.path_weights(), (std::vector<std::int64_t>{2, 2, 2, 2, 2, 3}));
  EXPECT_EQ(f.o2_graph.path_weights(), (std::vector<std::int64_t>{3, 4}));
  EXPECT_TRUE(f.o2_type_matches);
  EXPECT_TRUE(f.invariant_failures.empty());
  EXPECT_EQ(f.coeffs_x.back(), 0);
}

TEST(Family, ClosedFormsOnGrid) {
  for (std::int64_t n = 4; n <= 8; ++n)
    for (std::int64_t k = 2; k <= 6; ++k) {
      const auto f = build_family(n, k);
      EXPECT_TRUE(f.invariant_failures.empty()) << n << "," << k;
      const auto c = check_c_intersection(f);
      EXPECT_EQ(c.value, Rational(1, 4 * k * k * (n - 1) * (n - 1) - 1));
      EXPECT_TRUE(c.pass());
      EXPECT_TRUE(check_mld(f).pass());
      EXPECT_EQ(check_mld(f).mld, Rational(2 * k, 2 * k * (n - 1) - 1));
      EXPECT_TRUE(check_ample_degrees(f).pass());
    }
}

TEST(Family, MldIndependentOfStoredCoeffs) {
  const auto f = build_family(5, 3);
  EXPECT_EQ(mld_of(f.o2_graph), check_mld(f).mld_o2);
  EXPECT_EQ(mld_of(f.o1_graph), check_mld(f).mld_o1);
}

TEST(Family, NonNefMatchesZariskiOracle) {
  const auto f = build_family(4, 2);
  const std::int64_t m = 2;
  const auto rep = exhaustive_non_nef(f, m, 1000, 1);
  const auto cfg = family_configuration(f);
  ASSERT_EQ(rep.bounds.size(), f.o1_graph.size() + f.o2_graph.size());
  // brute force with the rational nefness test
  std::vector<BigInt> c(rep.bounds.size(), 0);
  BigInt count = 0, nef = 0;
  while (true) {
    ++count;
    if (is_nef(cfg, reduction_divisor(cfg, m, c))) ++nef;
    std::size_t i = 0;
    while (i < c.size() && c[i] == rep.bounds[i]) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
  }
  EXPECT_EQ(rep.searched, count);
  EXPECT_EQ(rep.nef_count, nef);
  EXPECT_TRUE(rep.none_nef());
}

TEST(Family, FractionalObstruction) {
  const auto f = build_family(4, 2);
  EXPECT_TRUE(check_fractional_obstruction(f, 2).holds());
  EXPECT_TRUE(check_fractional_obstruction(f, 4).holds());
}

TEST(Family, RejectsSmallParameters) {
  EXPECT_THROW(build_family(3, 2), PreconditionError);
  EXPECT_THROW(build_family(4, 1), PreconditionError);
}
