#include <gtest/gtest.h>

#include <numeric>

#include "pluricalc/error.hpp"
#include "pluricalc/ratmat.hpp"
#include "pluricalc/singularity.hpp"

using namespace pluricalc;

namespace {
CurveVertex v(std::string id) { return CurveVertex{std::move(id), -2, 0, std::nullopt}; }
}  // namespace

namespace {

// Euclid-style continued fraction, written directly.
std::vector<std::int64_t> naive_hj(std::int64_t n, std::int64_t q) {
  std::vector<std::int64_t> out;
  Rational x(n, q);
  while (true) {
    const auto a = x.ceil();
    out.push_back(a.get_si());
    const Rational rest = Rational(a) - x;
    if (rest.is_zero()) break;
    x = rest.reciprocal();
  }
  return out;
}

// Closed form for chains: with alpha_i, beta_i the continuants from each end,
// b_i = 1 - (alpha_i + beta_i) / n.
std::vector<Rational> continuant_coeffs(const std::vector<std::int64_t>& w) {
  const std::size_t r = w.size();
  std::vector<BigInt> left(r + 2), right(r + 2);
  left[0] = 0;
  left[1] = 1;
  for (std::size_t i = 0; i < r; ++i) left[i + 2] = w[i] * left[i + 1] - left[i];
  right[r + 1] = 0;
  right[r] = 1;
  for (std::size_t i = r; i-- > 0;) right[i] = w[i] * right[i + 1] - right[i + 2];
  const BigInt n = left[r + 1];
  std::vector<Rational> b;
  for (std::size_t i = 0; i < r; ++i) b.push_back(Rational(1) - Rational(left[i + 1] + right[i + 1], n));
  return b;
}

// dense solve of M b = -K.E, independent of the tridiagonal path
std::vector<Rational> dense_coeffs(const DualGraph& g) {
  const auto m = g.intersection_matrix();
  RatVector rhs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) rhs[i] = -k_dot_vertex(g, i);
  return solve(m, rhs);
}

}  // namespace

TEST(Singularity, Fixture_1_7_1_2) {
  const auto r = resolve(CyclicQuotientType(7, 2));
  EXPECT_EQ(r.weights, (std::vector<std::int64_t>{4, 2}));
  EXPECT_EQ(r.coeffs, (std::vector<Rational>{Rational(4, 7), Rational(2, 7)}));
  EXPECT_EQ(r.mld, Rational(3, 7));
  EXPECT_EQ(r.cartier_index, 7);
}

TEST(Singularity, Du_Val_A_n_is_crepant) {
  for (std::int64_t n = 2; n < 20; ++n) {
    const auto r = resolve(CyclicQuotientType(n, n - 1));
    EXPECT_EQ(r.weights, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 2));
    EXPECT_EQ(r.mld, 1);
    EXPECT_EQ(r.cartier_index, 1);
  }
}

TEST(Singularity, HjMatchesNaiveExpansionAndRoundTrips) {
  for (std::int64_t n = 2; n <= 120; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const CyclicQuotientType t(n, q);
      const auto w = hj_expand(t);
      ASSERT_EQ(w, naive_hj(n, q)) << n << "," << q;
      EXPECT_EQ(chain_type(w), t);
      std::vector<std::int64_t> rev(w.rbegin(), w.rend());
      EXPECT_EQ(chain_type(rev), t.dual());
    }
}

TEST(Singularity, DiscrepancyMatchesTwoOracles) {
  for (std::int64_t n = 2; n <= 60; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const auto w = hj_expand(CyclicQuotientType(n, q));
      const auto g = chain(w);
      const auto b = discrepancy_coeffs(g);
      ASSERT_EQ(b, continuant_coeffs(w)) << n << "," << q;
      ASSERT_EQ(b, dense_coeffs(g));
      for (const auto& r : pullback_residuals(g, b)) EXPECT_TRUE(r.is_zero());
    }
}

TEST(Singularity, TwoK1ChainMld) {
  for (std::int64_t k = 1; k <= 40; ++k) {
    const auto r = resolve(CyclicQuotientType(2 * k + 1, k));
    EXPECT_EQ(r.mld, Rational(k + 1, 2 * k + 1));
  }
}

TEST(Singularity, NonChainGraphUsesDenseSolve) {
  // D4 is Du Val: all discrepancies zero
  const DualGraph d4({v("A"), v("B"), v("C"), v("D")}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  for (const auto& b : discrepancy_coeffs(d4)) EXPECT_TRUE(b.is_zero());
  // elliptic curve of self-intersection -1: b = 1, not klt
  const DualGraph ell({CurveVertex{"E", -1, 1, std::nullopt}}, {});
  EXPECT_EQ(discrepancy_coeffs(ell), (std::vector<Rational>{Rational(1)}));
  EXPECT_THROW(mld_of(ell), NonKltError);
}

TEST(Singularity, NotContractible) {
  EXPECT_THROW(discrepancy_coeffs(chain({1, 1})), NotContractibleError);
}

TEST(Singularity, BadTypes) {
  EXPECT_THROW(CyclicQuotientType(6, 2), Error);
  EXPECT_THROW(CyclicQuotientType(5, 5), Error);
  EXPECT_THROW(CyclicQuotientType(1, 0), Error);
}

TEST(UnitEquation, N0Six) {
  const auto u = solve_unit_equation(6);
  const std::vector<UnitSolution> want{{{}, 6}, {{1}, 4}, {{1, 1}, 2}, {{1, 1, 1}, 0}};
  EXPECT_EQ(u.solutions, want);
  EXPECT_EQ(u.I0, (std::set<std::int64_t>{1}));
  EXPECT_EQ(u.n1, 18);
  EXPECT_EQ(u.gamma0, Rational(1, 90));
  EXPECT_TRUE(u.gamma0_interior);
}

TEST(UnitEquation, SolutionsSatisfyEquation) {
  for (std::int64_t n0 = 1; n0 <= 12; ++n0) {
    const auto u = solve_unit_equation(n0);
    for (const auto& s : u.solutions) {
      Rational sum = Rational(s.l, n0);
      for (auto k : s.ks) sum += unit_term(k);
      EXPECT_EQ(sum, 1) << "n0=" << n0;
    }
  }
}

TEST(Classify, StrictElevenThirtieths) {
  ClassifyOptions o;
  o.epsilon = Rational(11, 30);
  o.strict = true;
  o.threads = 2;
  const auto r = classify_chains(o);
  EXPECT_EQ(r.total, 96u);
  EXPECT_EQ(r.special_count, 25u);
  EXPECT_EQ(r.other_max_cartier_index, 35);
  for (const auto& c : r.chains) {
    EXPECT_GT(c.mld, o.epsilon);
    std::vector<std::int64_t> rev(c.weights.rbegin(), c.weights.rend());
    EXPECT_LE(c.weights, rev);
    EXPECT_EQ(c.mld, mld_of(chain(c.weights)));
  }
}

TEST(Classify, DeterministicAcrossThreadCounts) {
  ClassifyOptions o;
  o.epsilon = Rational(2, 5);
  o.threads = 1;
  const auto a = classify_chains(o);
  o.threads = 4;
  const auto b = classify_chains(o);
  ASSERT_EQ(a.chains.size(), b.chains.size());
  for (std::size_t i = 0; i < a.chains.size(); ++i) EXPECT_EQ(a.chains[i].weights, b.chains[i].weights);
}
