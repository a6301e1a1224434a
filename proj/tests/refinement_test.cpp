#include "drfwl/refinement.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "drfwl/error.hpp"
#include "fixtures.hpp"

namespace drfwl {
namespace {

Graph two_copies(const Graph& g) {
  const Graph parts[] = {g, g};
  return gen_disjoint_union(parts);
}

bool differs(const Graph& a, const Graph& b, Method m, int d = 2) {
  DistinguishParams p;
  p.method = m;
  p.d = d;
  return distinguish(a, b, p).distinguished;
}

void expect_dense_and_monotone(const Coloring& c) {
  std::set<std::uint32_t> used(c.colors.begin(), c.colors.end());
  EXPECT_EQ(used.size(), c.num_colors);
  if (!used.empty()) EXPECT_EQ(*used.rbegin() + 1, c.num_colors);
  for (std::size_t i = 1; i < c.class_history.size(); ++i) EXPECT_LT(c.class_history[i - 1], c.class_history[i]);
  EXPECT_EQ(c.class_history.size(), static_cast<std::size_t>(c.iterations) + 1);
  EXPECT_EQ(c.class_history.back(), c.num_colors);
}

TEST(Wl1, VertexTransitiveCycleHasOneClass) { EXPECT_EQ(wl1_refine(gen_cycle(6)).num_colors, 1u); }

TEST(Wl1, StarHasTwoClasses) {
  const auto c = wl1_refine(gen_star(3));
  EXPECT_EQ(c.num_colors, 2u);
  EXPECT_NE(c.colors[0], c.colors[1]);
  EXPECT_EQ(c.colors[1], c.colors[3]);
}

TEST(Wl1, TwoTrianglesLookLikeHexagon) {
  EXPECT_EQ(certificate(wl1_refine(two_copies(gen_cycle(3)))), certificate(wl1_refine(gen_cycle(6))));
  EXPECT_FALSE(differs(two_copies(gen_cycle(3)), gen_cycle(6), Method::WL1));
}

TEST(Fwl2, SeparatesSevenCycles) { EXPECT_TRUE(differs(two_copies(gen_cycle(7)), gen_cycle(14), Method::FWL2)); }

TEST(Fwl2, CompleteGraphOffDiagonalIsOneClass) {
  const auto c = fwl2_refine(gen_complete(4));
  std::set<std::uint32_t> off;
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = 0; v < 4; ++v)
      if (u != v) off.insert(c.colors[u * 4 + v]);
  EXPECT_EQ(off.size(), 1u);
  EXPECT_EQ(c.num_colors, 2u);
}

TEST(Fwl2, PermutedCopyHasSameCertificate) {
  const Graph g = gen_erdos_renyi(15, 0.3, 1);
  const Graph h = permute(g, random_permutation(15, 2));
  EXPECT_EQ(certificate(fwl2_refine(g)), certificate(fwl2_refine(h)));
}

TEST(Fwl2, SizeCap) {
  RefineOptions opts;
  opts.dense_cap = 10;
  EXPECT_THROW(fwl2_refine(gen_cycle(11), opts), SizeError);
  EXPECT_NO_THROW(fwl2_refine(gen_cycle(10), opts));
  DistinguishParams p;
  p.method = Method::FWL2;
  p.opts.dense_cap = 10;
  EXPECT_THROW(distinguish(gen_cycle(6), gen_cycle(6), p), SizeError);
}

TEST(Fwl2, StronglyRegularPairIsNotSeparated) {
  EXPECT_FALSE(differs(testing::shrikhande(), testing::rook4(), Method::FWL2));
  EXPECT_FALSE(differs(testing::shrikhande(), testing::rook4(), Method::DRFWL, 2));
}

TEST(Drfwl, DistanceOneSeesTriangles) {
  EXPECT_TRUE(differs(two_copies(gen_cycle(3)), gen_cycle(6), Method::DRFWL, 1));
}

TEST(Drfwl, SeparationFamilyAtTwoAndThree) {
  const Graph g = two_copies(gen_cycle(7));
  const Graph h = gen_cycle(14);
  EXPECT_FALSE(differs(g, h, Method::DRFWL, 2));
  EXPECT_TRUE(differs(g, h, Method::DRFWL, 3));
}

TEST(Drfwl, InitialColorIsDistance) {
  const Graph g = gen_path(4);
  const auto idx = TupleIndex::build(g, 3);
  RefineOptions opts;
  const auto c = drfwl_refine(idx, std::nullopt, opts);
  // Every refined class stays inside one distance.
  std::vector<int> distance_of(c.num_colors, -1);
  for (const auto& r : idx.tuples()) {
    auto& slot = distance_of[c.colors[idx.id(r.u, r.v)]];
    if (slot < 0) slot = r.distance;
    EXPECT_EQ(slot, r.distance);
  }
}

TEST(Drfwl, MaskValidation) {
  EXPECT_THROW(drfwl_refine(gen_cycle(6), 2, Mask{{2, 2, 3}}), std::invalid_argument);
  EXPECT_THROW(drfwl_refine(gen_cycle(6), 2, Mask{{0, 2, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(drfwl_refine(gen_cycle(6), 2, Mask{{1, 1, 2}, {0, 1, 1}}));
}

TEST(Drfwl, MaskParsing) {
  EXPECT_EQ(parse_mask("0,1,1; 1,1,2"), (Mask{{0, 1, 1}, {1, 1, 2}}));
  EXPECT_EQ(parse_mask(""), Mask{});
  EXPECT_THROW(parse_mask("0,1"), std::invalid_argument);
  EXPECT_THROW(parse_mask("0,1,1,1"), std::invalid_argument);
  EXPECT_THROW(parse_mask("a,b,c"), std::invalid_argument);
}

TEST(Drfwl, FullMaskIsDefault) {
  const Graph g = gen_erdos_renyi(20, 0.2, 3);
  EXPECT_EQ(drfwl_refine(g, 2).colors, drfwl_refine(g, 2, full_mask(2)).colors);
  for (const auto& t : full_mask(3)) EXPECT_TRUE(is_admissible(t, 3));
  // k=0: (0,0),(1,1); k=1: (0,1),(1,0),(1,1).
  EXPECT_EQ(full_mask(1).size(), 5u);
}

TEST(Drfwl, MaskedRunIsCoarser) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_erdos_renyi(20, 0.15, seed);
    Mask reduced;
    for (const auto& t : full_mask(2))
      if (t != Triple{2, 2, 2}) reduced.push_back(t);
    EXPECT_LE(drfwl_refine(g, 2, reduced).num_colors, drfwl_refine(g, 2).num_colors);
  }
}

TEST(Drfwl, SparseKernelMatchesDenseReference) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen_erdos_renyi(14, 0.2, 500 + seed);
    for (int d = 1; d <= 3; ++d) {
      const auto sparse = drfwl_refine(g, d);
      const auto dense = reference::drfwl_refine_dense(g, d);
      EXPECT_EQ(sparse.colors, dense.colors) << "seed " << seed << " d " << d;
      EXPECT_EQ(sparse.iterations, dense.iterations);
    }
    const Mask mask{{0, 1, 1}, {1, 1, 1}, {1, 1, 2}, {0, 0, 0}};
    EXPECT_EQ(drfwl_refine(g, 2, mask).colors, reference::drfwl_refine_dense(g, 2, mask).colors);
  }
}

TEST(Distinguish, IdenticalInputs) {
  const Graph g = gen_erdos_renyi(12, 0.3, 7);
  for (Method m : {Method::WL1, Method::FWL2, Method::DRFWL}) EXPECT_FALSE(differs(g, g, m));
}

TEST(Distinguish, FourCycles) {
  const Graph g = two_copies(gen_cycle(4));
  const Graph h = gen_cycle(8);
  EXPECT_FALSE(differs(g, h, Method::DRFWL, 1));
  EXPECT_TRUE(differs(g, h, Method::DRFWL, 2));
  EXPECT_TRUE(differs(g, h, Method::FWL2));
}

TEST(Distinguish, EmptyGraphs) {
  const Graph empty = Graph::from_edges(0, {});
  for (Method m : {Method::WL1, Method::FWL2, Method::DRFWL}) {
    EXPECT_FALSE(differs(empty, empty, m));
    EXPECT_TRUE(differs(empty, gen_cycle(3), m));
  }
}

TEST(Certificate, SerializationRoundTrip) {
  const auto cert = certificate(drfwl_refine(gen_cycle(3), 1));
  EXPECT_EQ(cert.serialize(), "v1;drfwl;1;0:3,1:6");
  EXPECT_EQ(Certificate::parse(cert.serialize()), cert);
  const auto wl = certificate(wl1_refine(gen_star(3)));
  EXPECT_EQ(Certificate::parse(wl.serialize()), wl);
  EXPECT_THROW(Certificate::parse("v2;drfwl;1;0:3"), std::invalid_argument);
  EXPECT_THROW(Certificate::parse("v1;drfwl;1;0-3"), std::invalid_argument);
  EXPECT_THROW(Certificate::parse("v1;nope;1;"), std::invalid_argument);
}

TEST(RefinementProperty, DenseColorsAndStrictMonotonicity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_erdos_renyi(16, 0.2, 700 + seed);
    expect_dense_and_monotone(wl1_refine(g));
    expect_dense_and_monotone(fwl2_refine(g));
    for (int d = 1; d <= 3; ++d) expect_dense_and_monotone(drfwl_refine(g, d));
  }
}

TEST(RefinementProperty, PermutationInvariance) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const NodeId n = static_cast<NodeId>(6 + seed % 10);
    const Graph g = gen_erdos_renyi(n, 0.3, 800 + seed);
    const Graph h = permute(g, random_permutation(n, 900 + seed));
    EXPECT_EQ(certificate(wl1_refine(g)), certificate(wl1_refine(h)));
    EXPECT_EQ(certificate(fwl2_refine(g)), certificate(fwl2_refine(h)));
    EXPECT_EQ(certificate(drfwl_refine(g, 2)), certificate(drfwl_refine(h, 2)));
  }
}

/// Pairs that are hard for WL(1): equal-size random regular graphs, plus the
/// explicit separation pairs.
std::vector<std::pair<Graph, Graph>> hard_pairs() {
  std::vector<std::pair<Graph, Graph>> pool;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const NodeId n = static_cast<NodeId>(8 + 2 * (seed % 4));
    const NodeId r = static_cast<NodeId>(3 + seed % 2);
    pool.emplace_back(gen_random_regular(n, r, seed), gen_random_regular(n, r, seed + 100));
  }
  for (int d = 1; d <= 3; ++d) pool.push_back(gen_separation_pair(d));
  pool.emplace_back(two_copies(gen_cycle(3)), gen_cycle(6));
  pool.emplace_back(testing::shrikhande(), testing::rook4());
  for (std::uint64_t seed = 0; seed < 8; ++seed)
    pool.emplace_back(gen_erdos_renyi(10, 0.3, seed), gen_erdos_renyi(10, 0.3, seed + 50));
  return pool;
}

TEST(RefinementProperty, HierarchyIsOneSided) {
  for (const auto& [g, h] : hard_pairs()) {
    const bool wl = differs(g, h, Method::WL1);
    const bool fwl = differs(g, h, Method::FWL2);
    bool previous = false;
    for (int d = 1; d <= 4; ++d) {
      const bool dr = differs(g, h, Method::DRFWL, d);
      if (previous) EXPECT_TRUE(dr) << "d=" << d;
      if (dr) EXPECT_TRUE(fwl) << "d=" << d;
      if (wl) EXPECT_TRUE(dr) << "d=" << d;
      previous = dr;
    }
  }
}

TEST(RefinementProperty, ThreadCountDoesNotChangeColors) {
  RefineOptions serial, parallel;
  parallel.exec = ExecPolicy{4};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = gen_erdos_renyi(40, 0.1, 1100 + seed);
    EXPECT_EQ(wl1_refine(g, serial).colors, wl1_refine(g, parallel).colors);
    EXPECT_EQ(fwl2_refine(g, serial).colors, fwl2_refine(g, parallel).colors);
    EXPECT_EQ(drfwl_refine(g, 2, std::nullopt, serial).colors, drfwl_refine(g, 2, std::nullopt, parallel).colors);
  }
}

TEST(Methods, NamesRoundTrip) {
  for (Method m : {Method::WL1, Method::FWL2, Method::DRFWL}) EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_THROW(parse_method("fwl3"), std::invalid_argument);
}

}  // namespace
}  // namespace drfwl
