#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drfwl/graph.hpp"

// Brute-force substructure counts by exhaustive search. Deliberately
// independent of the closed-form counting code.
namespace drfwl::oracle {

using Count = std::int64_t;

enum class MotifKind { Cycle, Path, TailedTriangle, ChordalCyclePos1, ChordalCyclePos2, TRPos1, TRPos2, TRPos3, Clique4 };

struct MotifSpec {
  MotifKind kind = MotifKind::Cycle;
  int length = 0;  // cycles and paths

  static MotifSpec cycle(int length) { return {MotifKind::Cycle, length}; }
  static MotifSpec path(int length) { return {MotifKind::Path, length}; }
  static MotifSpec of(MotifKind kind) { return {kind, 0}; }

  /// "cycleL", "pathL", "tailed_triangle", "chordal_cycle_cc1", "chordal_cycle_cc2",
  /// "tr1", "tr2", "tr3", "clique4".
  std::string name() const;
  static std::optional<MotifSpec> parse(std::string_view name);

  bool operator==(const MotifSpec&) const = default;
};

/// Small pattern graph with one or two marked vertices.
struct Pattern {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;
  int marked = 0;
  int second_marked = -1;
};

/// Pattern for a non-cycle, non-path motif. Vertex layouts:
///   tailed triangle: tail 0 attached to 1, triangle 1-2-3;
///   chordal cycle: 4-cycle 0-1-2-3 with chord 1-3 (pos1 = 0, pos2 = 1);
///   triangle-rectangle: apex 0, shared edge 1-2, rectangle 1-3-4-2 (pos1 = 0, pos2 = 1, pos3 = 3).
Pattern motif_pattern(const MotifSpec& spec);

/// Size of the orbit of the marked vertex under the pattern's automorphisms.
std::int64_t marked_orbit_size(const Pattern& p);

struct OracleOptions {
  std::size_t max_nodes = 512;
};

Count node_count(const Graph& g, const MotifSpec& spec, NodeId u, const OracleOptions& opts = {});
std::vector<Count> node_counts(const Graph& g, const MotifSpec& spec, const OracleOptions& opts = {});

/// Number of copies in the whole graph, by a separate global search.
Count graph_count(const Graph& g, const MotifSpec& spec, const OracleOptions& opts = {});

enum class PairKind { Path, Walk, Cycle, Tailed, CC1, CC2, TR1, TR2 };

struct PairQuery {
  PairKind kind = PairKind::Path;
  int k = 0;  // path/walk length, or first arc of a cycle
  int l = 0;  // second arc of a cycle
};

/// Pair-level counts:
///   Path/Walk: k-paths / k-walks from u to v;
///   Cycle: (k+l)-cycles through u and v made of a k-path and an l-path with disjoint interiors;
///   Tailed: tailed triangles with tail u and v a triangle vertex not adjacent to u;
///   CC1: chordal cycles with u a chord endpoint and v an adjacent degree-2 vertex;
///   CC2: chordal cycles with chord u-v;
///   TR1: triangle-rectangles with apex u and v on the shared edge;
///   TR2: u on the shared edge, v the rectangle vertex not adjacent to u.
Count pair_count(const Graph& g, const PairQuery& q, NodeId u, NodeId v, const OracleOptions& opts = {});

/// k-walk counts by dense integer matrix power (a second, naive method).
std::vector<std::vector<Count>> walk_matrix(const Graph& g, int k);

}  // namespace drfwl::oracle
