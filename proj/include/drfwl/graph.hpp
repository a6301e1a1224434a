#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace drfwl {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable simple undirected graph in compressed row layout.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicates (in either orientation) collapse;
  /// self-loops and out-of-range endpoints throw std::invalid_argument.
  static Graph from_edges(NodeId num_nodes, std::span<const Edge> edges);

  NodeId num_nodes() const { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool has_edge(NodeId u, NodeId v) const;

  /// Undirected edges with u < v, in ascending order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

/// Nodes at exact shortest-path distance 1..d from an owner node.
struct KHopSets {
  NodeId owner = 0;
  std::vector<std::vector<NodeId>> layers;  // layers[k-1] = N_k(owner), sorted

  int max_distance() const { return static_cast<int>(layers.size()); }
  std::span<const NodeId> at(int k) const { return layers.at(static_cast<std::size_t>(k - 1)); }
};

KHopSets khop(const Graph& g, NodeId v, int d);

/// Unbounded BFS distance labels from `source`; unreachable nodes get -1.
std::vector<int> bfs_distances(const Graph& g, NodeId source);

bool is_connected(const Graph& g);
/// Largest finite eccentricity; -1 if g is disconnected or empty.
int diameter(const Graph& g);

// Edge-list text I/O. Format: one "u v" pair per line, '#' comments, blank
// lines ignored, optional header line "n <count>".
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// Generators. Random generators use std::mt19937_64 raw output only (no
// standard distributions), so results are identical on every platform.
Graph gen_cycle(NodeId n);
Graph gen_path(NodeId n);
Graph gen_complete(NodeId n);
Graph gen_star(NodeId leaves);
Graph gen_petersen();
Graph gen_disjoint_union(std::span<const Graph> parts);
Graph gen_erdos_renyi(NodeId n, double p, std::uint64_t seed);
Graph gen_random_regular(NodeId n, NodeId r, std::uint64_t seed);

/// The pair {two (3d+1)-cycles, one (6d+2)-cycle}.
std::pair<Graph, Graph> gen_separation_pair(int d);

/// Relabels node v as perm[v].
Graph permute(const Graph& g, std::span<const NodeId> perm);
std::vector<NodeId> random_permutation(NodeId n, std::uint64_t seed);

}  // namespace drfwl
