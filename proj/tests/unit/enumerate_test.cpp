#include <gtest/gtest.h>

#include <set>
#include <string>

#include "longcycle/enumerate.hpp"
#include "longcycle/error.hpp"
#include "longcycle/graph6.hpp"

namespace longcycle {
namespace {

TEST(EdgeMaskTest, PairOrderMatchesGraph6) {
  EXPECT_EQ(graph_from_edge_mask(3, 0b001), Graph::from_edges(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
  EXPECT_EQ(graph_from_edge_mask(3, 0b010), Graph::from_edges(3, std::vector<std::pair<Vertex, Vertex>>{{0, 2}}));
  EXPECT_EQ(graph_from_edge_mask(3, 0b100), Graph::from_edges(3, std::vector<std::pair<Vertex, Vertex>>{{1, 2}}));
  EXPECT_EQ(graph_from_edge_mask(4, 0b111111), complete_graph(4));
}

TEST(EnumeratorTest, SmallCounts) {
  LabeledEnumerator e3(3);
  EXPECT_EQ(e3.total(), 8U);
  int count = 0;
  while (e3.next()) ++count;
  EXPECT_EQ(count, 8);

  count = 0;
  for_each_labeled(4, {.connected_only = true}, [&](const Graph&) { ++count; });
  EXPECT_EQ(count, 38);

  count = 0;
  for_each_labeled(1, {}, [&](const Graph& g) {
    EXPECT_EQ(g, Graph(1));
    ++count;
  });
  EXPECT_EQ(count, 1);
}

TEST(EnumeratorTest, EveryGraphExactlyOnce) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    std::uint64_t count = 0;
    for_each_labeled(n, {}, [&](const Graph& g) {
      seen.insert(emit_graph6(g));
      ++count;
    });
    const std::uint64_t expected = std::uint64_t{1} << (n * (n - 1) / 2);
    EXPECT_EQ(count, expected);
    EXPECT_EQ(seen.size(), expected);
  }
}

TEST(EnumeratorTest, EdgeFilter) {
  int count = 0;
  for_each_labeled(4, {.min_edges = 5}, [&](const Graph& g) {
    EXPECT_GE(g.edge_count(), 5);
    ++count;
  });
  EXPECT_EQ(count, 7);  // C(6,5) + 1
}

// Frozen from networkx.
TEST(EnumeratorTest, ConnectedSevenVertexCounts) {
  std::uint64_t c11 = 0;
  std::uint64_t c12 = 0;
  for_each_labeled(7, {.connected_only = true, .min_edges = 11}, [&](const Graph& g) {
    ++c11;
    if (g.edge_count() >= 12) ++c12;
  });
  EXPECT_EQ(c11, 1034968U);
  EXPECT_EQ(c12, 691828U);
}

TEST(EnumeratorTest, Caps) {
  EXPECT_NO_THROW(LabeledEnumerator{kEnumerationDefaultCap});
  EXPECT_THROW(LabeledEnumerator{8}, DomainError);
  LabeledEnumerator big(8, {.allow_large = true});
  EXPECT_EQ(big.total(), std::uint64_t{1} << 28);
  EXPECT_THROW((LabeledEnumerator{9, {.allow_large = true}}), DomainError);
  EXPECT_THROW(LabeledEnumerator{0}, DomainError);
}

}  // namespace
}  // namespace longcycle
