#include <gtest/gtest.h>

#include "pluricalc/error.hpp"
#include "pluricalc/singularity.hpp"
#include "pluricalc/zariski.hpp"
#include "pluricalc_cli/random_configs.hpp"

using namespace pluricalc;
using pluricalc::cli::Rng;

namespace {

Configuration a2_with_base() {
  Configuration cfg;
  cfg.graph = chain({2, 2});
  ExternalClass b;
  b.id = "B";
  b.dots = {1, 0};
  cfg.externals.push_back(b);
  return cfg;
}

LatticeDivisor base_plus(const Configuration& cfg, std::vector<Rational> c) {
  LatticeDivisor d;
  d.base = BaseTerm{"B", 1};
  d.coeffs = std::move(c);
  (void)cfg;
  return d;
}

void expect_decomposition(const Configuration& cfg, const LatticeDivisor& d, const ZariskiResult& z) {
  const auto pd = dot_vertices(cfg, z.P);
  std::vector<bool> in(cfg.graph.size(), false);
  for (auto i : z.support) in[i] = true;
  for (std::size_t i = 0; i < cfg.graph.size(); ++i) {
    EXPECT_EQ(z.P.coeffs[i] + z.N.coeffs[i], d.coeffs[i]);
    EXPECT_GE(z.N.coeffs[i], 0);
    EXPECT_GE(pd[i], 0);
    if (in[i]) EXPECT_TRUE(pd[i].is_zero());
    else EXPECT_TRUE(z.N.coeffs[i].is_zero());
  }
}

}  // namespace

TEST(Zariski, HandComputedA2) {
  // D = B + E1 + E2 on A2: D.E1 = 1 - 2 + 1 = 0, D.E2 = 1 - 2 = -1.
  // N = x E2 alone gives x = 1/2 but then P.E1 = -1/2, so the support is
  // {E1, E2}: 2a - b = 0, a - 2b = -1.
  const auto cfg = a2_with_base();
  const auto d = base_plus(cfg, {1, 1});
  const auto z = zariski_decompose(cfg, d);
  EXPECT_EQ(z.support, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(z.N.coeffs, (std::vector<Rational>{Rational(1, 3), Rational(2, 3)}));
  expect_decomposition(cfg, d, z);
}

TEST(Zariski, NefDivisorIsItsOwnPositivePart) {
  const auto cfg = a2_with_base();
  const auto d = base_plus(cfg, {0, 0});
  const auto z = zariski_decompose(cfg, d);
  EXPECT_TRUE(z.support.empty());
  EXPECT_EQ(z.P.coeffs, d.coeffs);
}

TEST(Zariski, CanonicalBaseUsesAdjunction) {
  Configuration cfg;
  cfg.graph = chain({3});
  LatticeDivisor k;
  k.base = BaseTerm{std::string(kCanonicalId), 1};
  k.coeffs = {0};
  EXPECT_EQ(dot_vertex(cfg, k, 0), 1);
  // K_Y = f^*K_X - b E, b = 1/3: f^*K_X is orthogonal to E.
  k.coeffs = {Rational(1, 3)};
  EXPECT_EQ(dot_vertex(cfg, k, 0), 0);
}

TEST(Zariski, RandomAgreesWithExhaustiveOracle) {
  Rng rng(101);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto cfg = cli::random_configuration(rng, 7);
    const auto d = cli::random_divisor(rng, cfg, false);
    const auto z = zariski_decompose(cfg, d);
    expect_decomposition(cfg, d, z);
    const auto ex = zariski_decompose_exhaustive(cfg, d);
    ASSERT_TRUE(ex.has_value());
    EXPECT_EQ(ex->P, z.P);
    EXPECT_EQ(ex->N, z.N);
    ++compared;
  }
  EXPECT_EQ(compared, 300);
}

TEST(Zariski, MonotoneAgainstNefTarget) {
  Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cfg = cli::random_nef_base_configuration(rng, 6);
    const auto pr = cli::random_pair(rng, cfg, false);
    EXPECT_TRUE(check_monotone(cfg, pr.d, pr.dtilde));
  }
}

TEST(Zariski, FloorLoopTerminatesWithinR0) {
  Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cfg = cli::random_nef_base_configuration(rng, 6);
    const auto pr = cli::random_pair(rng, cfg, true);
    const auto r = floor_round_loop(cfg, pr.d, pr.dtilde, true);
    EXPECT_LE(BigInt(static_cast<unsigned long>(r.steps)), r.r0);
    EXPECT_TRUE(is_relatively_nef(cfg, r.result));
    for (std::size_t i = 0; i < cfg.graph.size(); ++i) {
      EXPECT_TRUE(r.result.coeffs[i].is_integer());
      EXPECT_GE(r.result.coeffs[i], pr.dtilde.coeffs[i]);
      EXPECT_LE(r.result.coeffs[i], pr.d.coeffs[i]);
    }
  }
}

TEST(Zariski, FloorLoopRejectsFractions) {
  const auto cfg = a2_with_base();
  EXPECT_THROW(floor_round_loop(cfg, base_plus(cfg, {Rational(1, 2), 0}), base_plus(cfg, {0, 0}), true),
               PreconditionError);
}

TEST(Reduction, BoundsAndStep) {
  Configuration cfg;
  cfg.graph = chain({4, 2});  // b = 4/7, 2/7
  EXPECT_EQ(reduction_bounds(cfg, 7), (std::vector<BigInt>{4, 2}));
  // c = m b: K + sum (c/m) E = f^*K is relatively nef
  EXPECT_TRUE(coefficient_reduction(cfg, 14, {8, 4}).fixpoint);
  // K + 4/7 E1: D.E1 = -2/7, N = E1/14, c' = floor(4 - 1/2) = 3
  const auto s = coefficient_reduction(cfg, 7, {4, 0});
  EXPECT_EQ(s.b, (std::vector<Rational>{Rational(1, 14), 0}));
  EXPECT_EQ(s.next, (std::vector<BigInt>{3, 0}));
  EXPECT_FALSE(s.fixpoint);
  EXPECT_THROW(coefficient_reduction(cfg, 7, {5, 0}), PreconditionError);
}

TEST(Reduction, LoopIsMonotone) {
  Configuration cfg;
  cfg.graph = chain({2, 2, 3});
  const auto tr = reduction_loop(cfg, 7, {1, 2, 3}, true);
  for (std::size_t i = 1; i < tr.iterates.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_LE(tr.iterates[i][j], tr.iterates[i - 1][j]);
}
