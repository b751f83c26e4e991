#include <gtest/gtest.h>

#include "pluricalc/dualgraph.hpp"
#include "pluricalc/error.hpp"

using namespace pluricalc;

namespace {
CurveVertex v(std::string id) { return CurveVertex{std::move(id), -2, 0, std::nullopt}; }
}  // namespace

TEST(DualGraph, ChainBasics) {
  const auto g = chain({4, 2});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.vertex(0).id, "E1");
  EXPECT_EQ(g.intersection(0, 0), -4);
  EXPECT_EQ(g.intersection(0, 1), 1);
  EXPECT_TRUE(g.is_ordered_path());
  EXPECT_EQ(g.path_weights(), (std::vector<std::int64_t>{4, 2}));
  EXPECT_EQ(graph_det(g), 7);
}

TEST(DualGraph, KDotByAdjunction) {
  const auto g = chain({2, 3, 1});
  EXPECT_EQ(k_dot_vertex(g, 0), 0);
  EXPECT_EQ(k_dot_vertex(g, 1), 1);
  EXPECT_EQ(k_dot_vertex(g, 2), -1);
}

TEST(DualGraph, BlowUpEdge) {
  const auto g = chain({2, 2, 2});
  const auto h = blow_up_edge(g, 1, 2);
  ASSERT_EQ(h.size(), 4u);
  EXPECT_EQ(h.vertex(1).self_intersection, -3);
  EXPECT_EQ(h.vertex(2).self_intersection, -3);
  EXPECT_EQ(h.vertex(3).self_intersection, -1);
  EXPECT_EQ(h.intersection(1, 2), 0);
  EXPECT_EQ(h.intersection(1, 3), 1);
  EXPECT_EQ(h.intersection(2, 3), 1);
  EXPECT_THROW(blow_up_edge(g, 0, 2), PreconditionError);
}

TEST(DualGraph, SplitAtRemovesVertex) {
  const auto parts = split_at(chain({2, 3, 4, 5}), 1);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].path_weights(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(parts[1].path_weights(), (std::vector<std::int64_t>{4, 5}));
}

TEST(DualGraph, RejectsBadInput) {
  EXPECT_THROW(DualGraph({v("A"), v("A")}, {}), Error);
  EXPECT_THROW(DualGraph({v("A"), v("B")}, {{0, 0, 1}}), Error);
  EXPECT_THROW(chain({2}).index_of("Z"), Error);
}

TEST(DualGraph, ValidateFlagsCycleAndHeavyWeight) {
  const DualGraph tri({v("A"), v("B"), v("C")}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  ValidateOptions o;
  o.contractible = true;
  EXPECT_FALSE(validate(tri, o).empty());
  ValidateOptions e;
  e.epsilon = Rational(1, 2);
  EXPECT_TRUE(validate(chain({2, 3, 4}), e).empty());
  EXPECT_FALSE(validate(chain({2, 5}), e).empty());
}

TEST(DualGraph, ComponentsOfDisjointChains) {
  const DualGraph g({v("A"), v("B"), v("C")}, {{0, 1, 1}});
  EXPECT_EQ(connected_components(g).size(), 2u);
}
