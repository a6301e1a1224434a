#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "drfwl/graph.hpp"
#include "drfwl/parallel.hpp"
#include "drfwl/tuple_index.hpp"

namespace drfwl {

using Count = std::int64_t;

enum class Substructure {
  Cycle3,
  Cycle4,
  Cycle5,
  Cycle6,
  Cycle7,
  Path2,
  Path3,
  Path4,
  TailedTriangle,
  ChordalCycleCC1,  // marked vertex: a degree-2 vertex of the 4-cycle
  ChordalCycleCC2,  // marked vertex: an endpoint of the chord
  TR1,              // triangle apex
  TR2,              // endpoint of the shared edge
  TR3,              // rectangle vertex off the shared edge
};

std::span<const Substructure> substructure_catalog();
std::string_view substructure_name(Substructure s);
std::optional<Substructure> parse_substructure(std::string_view name);
/// Smallest distance cap at which the closed form exists.
int required_distance(Substructure s);
/// Number of marked positions per copy: graph count = sum of node counts / factor.
Count position_factor(Substructure s);

/// Pairwise statistics indexed by TupleId. Entries are zero on the diagonal
/// and for pairs where a quantity is not defined (e.g. CC1 on non-adjacent
/// pairs). 3-paths are filled up to distance 3, 4-paths up to distance 4.
struct PairStats {
  std::vector<Count> p2, p3, p4, w3, w4;
  std::vector<Count> t;         // tailed triangles, tail u, v a triangle vertex
  std::vector<Count> cc1, cc2;  // adjacent pairs only
  std::vector<Count> tr1;       // adjacent pairs only
  std::vector<Count> tr2;       // distance <= 2
  std::vector<Count> c23, c24;  // distance <= 2
};

struct NodeCounts {
  std::vector<Count> degree;
  std::vector<Count> c3, c4, c5, c6, c7;  // c7 empty unless d >= 3
  std::vector<Count> p2, p3, p4;
  std::vector<Count> tailed, cc1, cc2, tr1, tr2, tr3;
  std::vector<std::vector<Count>> walks;  // walks[k - 1][u] = W_k(u), k = 1..4

  // The same quantities through a second aggregation route (consistency checks).
  std::vector<Count> cc2_from_pairs, tr2_from_pairs, c6_from_pairs;

  /// Per-node values of s; throws CapabilityError when not computed.
  const std::vector<Count>& of(Substructure s) const;
};

struct CountResult {
  int max_distance = 0;
  PairStats pairs;
  NodeCounts nodes;
};

// Individual passes. Each writes one entry per tuple.
std::vector<Count> pairwise_p2(const TupleIndex& idx, const ExecPolicy& exec = {});
std::vector<Count> node_triangles(const TupleIndex& idx, std::span<const Count> p2, const ExecPolicy& exec = {});
/// W3 and P3 together (the latter is derived from the former).
void pairwise_p3(const TupleIndex& idx, std::span<const Count> p2, std::vector<Count>& w3, std::vector<Count>& p3,
                 const ExecPolicy& exec = {});
void pairwise_p4(const TupleIndex& idx, std::span<const Count> p2, std::span<const Count> c3, std::vector<Count>& w4,
                 std::vector<Count>& p4, const ExecPolicy& exec = {});
std::vector<Count> node_walks(const Graph& g, int k);

/// Full pipeline. d = 1 yields C3 and walks only; d >= 2 everything except
/// C7; d >= 3 adds C7.
CountResult count_substructures(const Graph& g, int d, const ExecPolicy& exec = {});
CountResult count_substructures(const Graph& g, const TupleIndex& idx, const ExecPolicy& exec = {});

/// Whole-graph count; throws std::logic_error if the node sum is not
/// divisible by the position factor.
Count graph_level(const NodeCounts& counts, Substructure s);

}  // namespace drfwl
