#include <gtest/gtest.h>

#include "pluricalc/error.hpp"
#include "pluricalc/nefbuilder.hpp"

using namespace pluricalc;

TEST(NefBuilder, FixtureN2TwoM0Five) {
  const auto inp = make_nef_input(5, 2, {4});
  const auto c = build_coeffs(inp);
  EXPECT_EQ(c, (std::vector<BigInt>{0, 0, 1, 2}));
  const auto cert = verify_exceptional(inp, c);
  EXPECT_EQ(cert.intersections, (std::vector<Rational>{0, 1, 0, 0}));
  EXPECT_TRUE(cert.nef);
  EXPECT_TRUE(cert.bounds_hold);
}

TEST(NefBuilder, ProfileOnEveryChain) {
  for (std::int64_t n2 = 1; n2 <= 6; ++n2) {
    const BigInt m0 = 3 * (2 * n2 + 1);
    std::vector<std::int64_t> ks;
    for (std::int64_t k = n2; k <= 3 * n2 + 4; ++k) ks.push_back(k);
    const auto inp = make_nef_input(m0, n2, ks);
    const auto cert = verify_exceptional(inp, build_coeffs(inp));
    EXPECT_TRUE(cert.nef) << "n2=" << n2;
    EXPECT_TRUE(cert.bounds_hold);
    std::size_t off = 0;
    for (auto k : ks) {
      const auto want = expected_chain_profile(m0, n2, k);
      for (std::size_t j = 0; j < want.size(); ++j) EXPECT_EQ(cert.intersections[off + j], want[j]);
      off += static_cast<std::size_t>(k);
    }
  }
}

TEST(NefBuilder, ShortChainRejected) { EXPECT_THROW(make_nef_input(5, 2, {1}).check(), PreconditionError); }

TEST(NefBuilder, InvalidM0) {
  EXPECT_THROW(make_nef_input(4, 2, {3}).check(), InvalidM0Error);
  EXPECT_THROW(build_coeffs(make_nef_input(4, 2, {3})), InvalidM0Error);
}

TEST(NefBuilder, RationalForcesNoChains) {
  const auto inp = make_nef_input(5, 2, {4, 5}, chain({4, 2}), true);
  EXPECT_TRUE(inp.active_chains().empty());
  EXPECT_THROW(verify_exceptional(inp, build_coeffs(inp)), InvalidM0Error);
  const auto ok = make_nef_input(35, 2, {4, 5}, chain({4, 2}), true);
  EXPECT_TRUE(verify_exceptional(ok, build_coeffs(ok)).nef);
}

TEST(NefBuilder, ConstantsChain) {
  const auto r = constants_report(18, Rational(1, 90), 1);
  EXPECT_EQ(r.n2, 90);
  EXPECT_EQ(r.m, 192 * r.m2);
  EXPECT_EQ(r.m0 % 18, 0);
  EXPECT_EQ(choose_n2(5, Rational(1, 3)), 10);
}
