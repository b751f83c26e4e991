#include <gtest/gtest.h>

#include <random>

#include "pluricalc/error.hpp"
#include "pluricalc/ratmat.hpp"

using namespace pluricalc;

namespace {

// cofactor expansion, fine up to 6x6
Rational cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Rational t = m(0, c) * cofactor_det(minor);
    acc = (c % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) & 3));
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
  EXPECT_EQ(Rational::parse("-3").str(), "-3");
  EXPECT_EQ(Rational::parse("0/5").str(), "0");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Rational, FloorCeilFrac) {
  EXPECT_EQ(Rational(-7, 3).floor(), -3);
  EXPECT_EQ(Rational(-7, 3).ceil(), -2);
  EXPECT_EQ(Rational(7, 3).frac(), Rational(1, 3));
  EXPECT_EQ(Rational(-7, 3).frac(), Rational(2, 3));
  EXPECT_EQ(floor_div(BigInt(-7), BigInt(2)), -4);
}

TEST(RatMatrix, DeterminantMatchesCofactorOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 6, -5, 5);
    EXPECT_EQ(det(m), cofactor_det(m)) << "trial " << trial;
  }
}

TEST(RatMatrix, SolveResidualIsZero) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto m = random_matrix(rng, n, -4, 4);
    if (det(m).is_zero()) {
      EXPECT_THROW(solve(m, RatVector(n, Rational(1))), Error);
      continue;
    }
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(static_cast<long>(i) - 2, 3);
    EXPECT_EQ(m * solve(m, v), v);
  }
}

TEST(RatMatrix, NegativeDefinite) {
  EXPECT_TRUE(is_negative_definite(RatMatrix{{-2, 1}, {1, -2}}));
  EXPECT_FALSE(is_negative_definite(RatMatrix{{-1, 1}, {1, -1}}));
  EXPECT_FALSE(is_negative_definite(RatMatrix{{-2, 0}, {0, 1}}));
  // E8 lattice, negated
  RatMatrix e8(8, 8);
  for (std::size_t i = 0; i < 8; ++i) e8(i, i) = -2;
  for (std::size_t i = 0; i + 1 < 7; ++i) e8(i, i + 1) = e8(i + 1, i) = 1;
  e8(4, 7) = e8(7, 4) = 1;
  EXPECT_TRUE(is_negative_definite(e8));
  EXPECT_EQ(det(-e8), 1);
}

TEST(RatMatrix, TridiagonalAgreesWithDense) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> w(2, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 9;
    RatVector diag(n), off(n - 1, Rational(1));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i] = -w(rng);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = 1;
    EXPECT_EQ(is_negative_definite_tridiagonal(off, diag), is_negative_definite(m));
    RatVector rhs(n, Rational(1));
    EXPECT_EQ(solve_tridiagonal(off, diag, off, rhs), solve(m, rhs));
  }
}

TEST(Smith, InvariantsAndDecomposition) {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(m);
  ASSERT_EQ(s.diag.size(), 3u);
  EXPECT_EQ(s.diag[0], 2);
  EXPECT_EQ(s.diag[1], 6);
  EXPECT_EQ(s.diag[2], 12);
  IntMatrix d(3, 3);
  for (std::size_t i = 0; i < 3; ++i) d(i, i) = s.diag[i];
  EXPECT_EQ(s.left * m * s.right, d);
  EXPECT_EQ(abs(det(s.left)), 1);
  EXPECT_EQ(abs(det(s.right)), 1);
}

TEST(Smith, RandomDivisibilityChain) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = d(rng);
    const auto s = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < 3; ++i)
      if (s.diag[i] != 0) {
        EXPECT_EQ(s.diag[i + 1] % s.diag[i], 0);
      }
    BigInt prod = s.diag[0] * s.diag[1] * s.diag[2];
    EXPECT_EQ(prod, abs(det(m)));
  }
}
