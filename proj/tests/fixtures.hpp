#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drfwl/graph.hpp"

namespace drfwl::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Small structured graphs plus a handful of seeded random ones.
inline std::vector<NamedGraph> small_graph_zoo() {
  std::vector<NamedGraph> zoo;
  for (NodeId n = 3; n <= 8; ++n) zoo.push_back({"C" + std::to_string(n), gen_cycle(n)});
  for (NodeId n = 2; n <= 6; ++n) zoo.push_back({"K" + std::to_string(n), gen_complete(n)});
  zoo.push_back({"star3", gen_star(3)});
  zoo.push_back({"path5", gen_path(5)});
  zoo.push_back({"petersen", gen_petersen()});
  const Graph two_triangles[] = {gen_cycle(3), gen_cycle(3)};
  zoo.push_back({"2xC3", gen_disjoint_union(two_triangles)});
  zoo.push_back({"empty", Graph::from_edges(0, {})});
  zoo.push_back({"isolated", Graph::from_edges(3, {})});
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    zoo.push_back({"er12_" + std::to_string(seed), gen_erdos_renyi(12, 0.35, seed)});
  return zoo;
}

}  // namespace drfwl::testing

namespace drfwl::testing {

/// Cayley graph on Z4 x Z4 with connection set {±(0,1), ±(1,0), ±(1,1)}.
inline Graph shrikhande() {
  std::vector<Edge> edges;
  const int steps[3][2] = {{0, 1}, {1, 0}, {1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (const auto& s : steps) {
        const int c = (a + s[0]) % 4, d = (b + s[1]) % 4;
        edges.emplace_back(static_cast<NodeId>(a * 4 + b), static_cast<NodeId>(c * 4 + d));
      }
  return Graph::from_edges(16, edges);
}

/// 4x4 rook's graph: same row or same column. Same parameters as shrikhande().
inline Graph rook4() {
  std::vector<Edge> edges;
  for (NodeId x = 0; x < 16; ++x)
    for (NodeId y = x + 1; y < 16; ++y)
      if (x / 4 == y / 4 || x % 4 == y % 4) edges.emplace_back(x, y);
  return Graph::from_edges(16, edges);
}

}  // namespace drfwl::testing
