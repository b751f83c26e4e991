#include <gtest/gtest.h>

#include <cstdlib>

#include "pluricalc/error.hpp"
#include "pluricalc/json_io.hpp"
#include "pluricalc/parallel.hpp"
#include "pluricalc_cli/random_configs.hpp"

using namespace pluricalc;

TEST(JsonIo, RationalsAreStrings) {
  EXPECT_EQ(rational_json(Rational(-3, 6)), json("-1/2"));
  EXPECT_EQ(rational_from_json(json("4/6")), Rational(2, 3));
  EXPECT_EQ(rational_from_json(json(5)), Rational(5));
  EXPECT_THROW(rational_from_json(json(0.5)), Error);
}

TEST(JsonIo, GraphRoundTrip) {
  const DualGraph g({{"A", -3, 0, Rational(1, 3)}, {"B", -2, 1, std::nullopt}}, {{0, 1, 2}});
  EXPECT_EQ(graph_from_json(graph_json(g)), g);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[{"id":"A"}],"edges":[["A","Z"]]})")), Error);
}

TEST(JsonIo, ConfigAndDivisorRoundTrip) {
  cli::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto cfg = cli::random_configuration(rng, 6);
    const auto back = config_from_json(config_json(cfg));
    EXPECT_EQ(back.graph, cfg.graph);
    const auto d = cli::random_divisor(rng, cfg, false);
    const auto d2 = divisor_from_json(back, divisor_json(cfg, d));
    EXPECT_EQ(d2.coeffs, d.coeffs);
    ASSERT_TRUE(d2.base.has_value());
    EXPECT_EQ(d2.base->id, d.base->id);
  }
}

TEST(Parallel, EnvCapsThreads) {
  ::setenv("PLURICALC_THREADS", "3", 1);
  EXPECT_EQ(default_thread_count(), 3u);
  ::setenv("PLURICALC_THREADS", "1", 1);
  EXPECT_EQ(default_thread_count(), 1u);
  ::unsetenv("PLURICALC_THREADS");
  EXPECT_GE(default_thread_count(), 1u);
}

TEST(Parallel, VisitsEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; }, 4);
  for (int h : hits) EXPECT_EQ(h, 1);
}
