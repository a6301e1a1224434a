#include "drfwl/oracle.hpp"

#include <gtest/gtest.h>

#include "drfwl/error.hpp"
#include "fixtures.hpp"

namespace drfwl::oracle {
namespace {

TEST(OracleNodeCount, SmallCases) {
  for (NodeId u = 0; u < 5; ++u) EXPECT_EQ(node_count(gen_cycle(5), MotifSpec::cycle(5), u), 1);
  for (NodeId u = 0; u < 4; ++u) EXPECT_EQ(node_count(gen_complete(4), MotifSpec::of(MotifKind::Clique4), u), 1);
  // 12 pentagons, 5 vertices each, spread over 10 vertices.
  for (NodeId u = 0; u < 10; ++u) EXPECT_EQ(node_count(gen_petersen(), MotifSpec::cycle(5), u), 6);
}

TEST(OracleNodeCount, PathsCountedPerDirectionFromStart) {
  const Graph line = gen_path(5);
  EXPECT_EQ(node_count(line, MotifSpec::path(4), 0), 1);
  EXPECT_EQ(node_count(line, MotifSpec::path(2), 2), 2);
  EXPECT_EQ(node_count(gen_star(3), MotifSpec::path(2), 0), 0);
  EXPECT_EQ(node_count(gen_star(3), MotifSpec::path(2), 1), 2);
}

TEST(OracleNodeCount, MotifPositionsOnSmallGraphs) {
  // Tailed triangle with tail 0: only the tail is at the marked position.
  const Edge tt_edges[] = {{0, 1}, {1, 2}, {1, 3}, {2, 3}};
  const Graph tt = Graph::from_edges(4, tt_edges);
  EXPECT_EQ(node_count(tt, MotifSpec::of(MotifKind::TailedTriangle), 0), 1);
  EXPECT_EQ(node_count(tt, MotifSpec::of(MotifKind::TailedTriangle), 1), 0);

  // Diamond: 4-cycle 0-1-2-3 with chord 1-3.
  const Edge diamond_edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}};
  const Graph diamond = Graph::from_edges(4, diamond_edges);
  EXPECT_EQ(node_count(diamond, MotifSpec::of(MotifKind::ChordalCyclePos1), 0), 1);
  EXPECT_EQ(node_count(diamond, MotifSpec::of(MotifKind::ChordalCyclePos1), 1), 0);
  EXPECT_EQ(node_count(diamond, MotifSpec::of(MotifKind::ChordalCyclePos2), 1), 1);

  // House: triangle 0-1-2 on top of square 1-3-4-2.
  const Edge house_edges[] = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 2}};
  const Graph house = Graph::from_edges(5, house_edges);
  EXPECT_EQ(node_count(house, MotifSpec::of(MotifKind::TRPos1), 0), 1);
  EXPECT_EQ(node_count(house, MotifSpec::of(MotifKind::TRPos2), 1), 1);
  EXPECT_EQ(node_count(house, MotifSpec::of(MotifKind::TRPos3), 4), 1);
  EXPECT_EQ(node_count(house, MotifSpec::of(MotifKind::TRPos3), 0), 0);
}

TEST(OracleNodeCount, SizeCap) {
  OracleOptions opts;
  opts.max_nodes = 5;
  EXPECT_THROW(node_count(gen_cycle(6), MotifSpec::cycle(3), 0, opts), SizeError);
  EXPECT_THROW(graph_count(gen_cycle(6), MotifSpec::cycle(3), opts), SizeError);
  EXPECT_THROW(node_count(gen_cycle(5), MotifSpec::cycle(3), 7), std::out_of_range);
}

TEST(OraclePairCount, Examples) {
  const Graph g = gen_erdos_renyi(12, 0.35, 3);
  for (NodeId u = 0; u < 12; ++u)
    for (NodeId v = 0; v < 12; ++v)
      if (u != v) EXPECT_EQ(pair_count(g, {PairKind::Walk, 2}, u, v), pair_count(g, {PairKind::Path, 2}, u, v));
  EXPECT_EQ(pair_count(gen_cycle(5), {PairKind::Cycle, 2, 3}, 0, 2), 1);
  EXPECT_EQ(pair_count(gen_cycle(6), {PairKind::Cycle, 3, 3}, 0, 3), 1);
  EXPECT_EQ(pair_count(gen_cycle(6), {PairKind::Cycle, 2, 4}, 0, 3), 0);
  EXPECT_EQ(pair_count(gen_complete(4), {PairKind::CC2}, 0, 1), 1);
  EXPECT_EQ(pair_count(gen_complete(4), {PairKind::CC1}, 0, 1), 2);
}

TEST(OracleProperty, NodeCyclesSumToGlobalCount) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = gen_erdos_renyi(14, 0.3, seed);
    for (int len = 3; len <= 7; ++len) {
      Count total = 0;
      for (Count x : node_counts(g, MotifSpec::cycle(len))) total += x;
      EXPECT_EQ(total, len * graph_count(g, MotifSpec::cycle(len))) << "len " << len;
    }
  }
}

TEST(OracleProperty, WalksMatchMatrixPower) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = gen_erdos_renyi(20, 0.2, seed);
    for (int k = 1; k <= 4; ++k) {
      const auto a = walk_matrix(g, k);
      for (NodeId u = 0; u < 20; ++u)
        for (NodeId v = 0; v < 20; ++v) EXPECT_EQ(pair_count(g, {PairKind::Walk, k}, u, v), a[u][v]);
    }
  }
}

TEST(MotifSpec, NamesRoundTrip) {
  for (auto spec : {MotifSpec::cycle(3), MotifSpec::cycle(7), MotifSpec::path(4), MotifSpec::of(MotifKind::Clique4),
                    MotifSpec::of(MotifKind::TRPos3), MotifSpec::of(MotifKind::ChordalCyclePos1)})
    EXPECT_EQ(MotifSpec::parse(spec.name()), spec);
  EXPECT_FALSE(MotifSpec::parse("cycle2"));
  EXPECT_FALSE(MotifSpec::parse("cyclex"));
  EXPECT_FALSE(MotifSpec::parse("hexagon"));
}

TEST(Patterns, MarkedOrbitSizes) {
  EXPECT_EQ(marked_orbit_size(motif_pattern(MotifSpec::cycle(5))), 5);
  EXPECT_EQ(marked_orbit_size(motif_pattern(MotifSpec::path(3))), 2);
  EXPECT_EQ(marked_orbit_size(motif_pattern(MotifSpec::of(MotifKind::Clique4))), 4);
  EXPECT_EQ(marked_orbit_size(motif_pattern(MotifSpec::of(MotifKind::TailedTriangle))), 1);
  EXPECT_EQ(marked_orbit_size(motif_pattern(MotifSpec::of(MotifKind::TRPos3))), 2);
}

}  // namespace
}  // namespace drfwl::oracle
