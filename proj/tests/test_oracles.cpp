#include <gtest/gtest.h>

#include "oracles.hpp"

// The oracles are only worth something if they are right on cases that can
// be counted by hand.

namespace {

oracle::Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  oracle::Graph g;
  g.n = n;
  for (auto [u, v] : edges) {
    ++g.mult[u][v];
    ++g.mult[v][u];
  }
  return g;
}

}  // namespace

TEST(OracleEnumeration, MatchesLabelledEnumeration) {
  for (int n = 1; n <= 5; ++n) {
    const int max_edges = n <= 3 ? 6 : 5;
    auto fast = oracle::multigraph_classes(n, max_edges);
    auto slow = oracle::class_counts_slow(n, max_edges);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t m = 0; m < fast.size(); ++m) EXPECT_EQ(fast[m].size(), slow[m]) << n << " " << m;
  }
}

// Loopless multigraphs by edge count (isolated vertices ignored) are
// 1, 1, 3, 8, 23, 66, ...; on 8 vertices the 5-edge count misses the two
// graphs that need 9 or 10 vertices.
TEST(OracleEnumeration, KnownCountsOnEightVertices) {
  auto classes = oracle::multigraph_classes(8, 5);
  std::vector<std::size_t> counts;
  for (const auto& level : classes) counts.push_back(level.size());
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 1, 3, 8, 23, 64}));
  for (std::size_t m = 0; m < classes.size(); ++m)
    for (const auto& g : classes[m]) EXPECT_EQ(g.edges(), static_cast<int>(m));
}

TEST(OracleChordless, HandCounts) {
  EXPECT_EQ(oracle::chordless_cycles(make(3, {{0, 1}, {1, 2}, {0, 2}})).size(), 1u);
  EXPECT_EQ(oracle::chordless_cycles(make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})).size(), 1u);
  // square with one diagonal: two triangles
  EXPECT_EQ(oracle::chordless_cycles(make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})).size(), 2u);
  // K4: four triangles, no chordless square
  EXPECT_EQ(oracle::chordless_cycles(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})).size(), 4u);
  // K_{2,3}: three squares
  EXPECT_EQ(oracle::chordless_cycles(make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})).size(), 3u);
  // doubled and tripled edges count once as a 2-cycle
  EXPECT_EQ(oracle::chordless_cycles(make(2, {{0, 1}, {0, 1}})).size(), 1u);
  EXPECT_EQ(oracle::chordless_cycles(make(2, {{0, 1}, {0, 1}, {0, 1}})).size(), 1u);
  // a doubled edge inside a triangle: the triangle and the 2-cycle
  EXPECT_EQ(oracle::chordless_cycles(make(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}})).size(), 2u);
  EXPECT_EQ(oracle::chordless_cycles(make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})).size(), 0u);
}

TEST(OracleChordless, SpanRank) {
  auto k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(oracle::betti(k4), 3);
  EXPECT_EQ(oracle::chordless_span_rank(k4), 3);
  auto triple = make(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(oracle::betti(triple), 2);
  EXPECT_EQ(oracle::chordless_span_rank(triple), 2);
}

TEST(OracleChain, Lengths) {
  EXPECT_EQ(oracle::chain_insertions(3, 1), 2);
  EXPECT_EQ(oracle::chain_insertions(5, 4), 1);
  EXPECT_EQ(oracle::chain_insertions(5, 3), 2);
  EXPECT_EQ(oracle::chain_insertions(2, 1), 1);
}

TEST(OracleDecompose, TriangleWithTailAndPath) {
  // triangle 0 1 2 with tail 3, joined through 4 to triangle 5 6 7
  auto g = make(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  oracle::Decomposition d = oracle::decompose(g);
  EXPECT_EQ(d.clusters.size(), 2u);
  ASSERT_EQ(d.tails.size(), 1u);
  EXPECT_EQ(d.tails[0], (std::set<int>{3}));
  ASSERT_EQ(d.connecting_paths.size(), 1u);
  EXPECT_EQ(d.connecting_paths[0], (std::set<int>{4}));
  EXPECT_FALSE(d.unnamed_piece);
}
