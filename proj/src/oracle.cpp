#include "drfwl/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "drfwl/error.hpp"

namespace drfwl::oracle {

namespace {

using EdgeKey = std::uint64_t;
using Signature = std::vector<EdgeKey>;

EdgeKey edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

void check_size(const Graph& g, const OracleOptions& opts) {
  if (g.num_nodes() > opts.max_nodes)
    throw SizeError("oracle: n=" + std::to_string(g.num_nodes()) + " exceeds cap " + std::to_string(opts.max_nodes));
}

/// All simple paths with `length` edges starting at `start`, as vertex sequences.
/// Calls visit(path) for each.
void for_each_simple_path(const Graph& g, NodeId start, int length,
                          const std::function<void(const std::vector<NodeId>&)>& visit) {
  std::vector<NodeId> path{start};
  std::vector<char> on_path(g.num_nodes(), 0);
  on_path[start] = 1;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(path.size()) == length + 1) {
      visit(path);
      return;
    }
    for (NodeId y : g.neighbors(path.back())) {
      if (on_path[y]) continue;
      on_path[y] = 1;
      path.push_back(y);
      extend();
      path.pop_back();
      on_path[y] = 0;
    }
  };
  extend();
}

Signature cycle_signature(const std::vector<NodeId>& closed_walk) {
  Signature sig;
  for (std::size_t i = 0; i < closed_walk.size(); ++i)
    sig.push_back(edge_key(closed_walk[i], closed_walk[(i + 1) % closed_walk.size()]));
  std::sort(sig.begin(), sig.end());
  return sig;
}

/// Distinct images (by edge set) of p in g with the marked vertex at u and,
/// if the pattern has a second marked vertex, that one at v.
void collect_embeddings(const Graph& g, const Pattern& p, NodeId u, std::optional<NodeId> v,
                        std::set<Signature>& images) {
  // Order pattern vertices by BFS from the marked vertex so that each one
  // after the first has an already-placed neighbour.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(p.num_nodes));
  for (auto [a, b] : p.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> order{p.marked};
  std::vector<int> anchor(static_cast<std::size_t>(p.num_nodes), -1);
  std::vector<char> queued(static_cast<std::size_t>(p.num_nodes), 0);
  queued[p.marked] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int y : adj[order[head]])
      if (!queued[y]) {
        queued[y] = 1;
        anchor[y] = order[head];
        order.push_back(y);
      }
  if (static_cast<int>(order.size()) != p.num_nodes) throw std::logic_error("pattern must be connected");

  std::vector<NodeId> image(static_cast<std::size_t>(p.num_nodes));
  std::vector<char> used(g.num_nodes(), 0);

  std::function<void(std::size_t)> place = [&](std::size_t pos) {
    if (pos == order.size()) {
      Signature sig;
      for (auto [a, b] : p.edges) sig.push_back(edge_key(image[a], image[b]));
      std::sort(sig.begin(), sig.end());
      images.insert(std::move(sig));
      return;
    }
    const int x = order[pos];
    for (NodeId cand : g.neighbors(image[anchor[x]])) {
      if (used[cand]) continue;
      if (x == p.second_marked && v && cand != *v) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        const int y = order[q];
        const bool pattern_edge = std::find(adj[x].begin(), adj[x].end(), y) != adj[x].end();
        if (pattern_edge && !g.has_edge(cand, image[y])) ok = false;
      }
      if (!ok) continue;
      used[cand] = 1;
      image[x] = cand;
      place(pos + 1);
      used[cand] = 0;
    }
  };
  image[p.marked] = u;
  used[u] = 1;
  place(1);
}

Count count_embeddings(const Graph& g, const Pattern& p, NodeId u, std::optional<NodeId> v) {
  std::set<Signature> images;
  collect_embeddings(g, p, u, v, images);
  return static_cast<Count>(images.size());
}

Pattern pair_pattern(PairKind kind) {
  switch (kind) {
    case PairKind::Tailed: {
      Pattern p = motif_pattern(MotifSpec::of(MotifKind::TailedTriangle));
      p.second_marked = 2;
      return p;
    }
    case PairKind::CC1: {
      Pattern p = motif_pattern(MotifSpec::of(MotifKind::ChordalCyclePos2));
      p.second_marked = 0;
      return p;
    }
    case PairKind::CC2: {
      Pattern p = motif_pattern(MotifSpec::of(MotifKind::ChordalCyclePos2));
      p.second_marked = 3;
      return p;
    }
    case PairKind::TR1: {
      Pattern p = motif_pattern(MotifSpec::of(MotifKind::TRPos1));
      p.second_marked = 1;
      return p;
    }
    case PairKind::TR2: {
      Pattern p = motif_pattern(MotifSpec::of(MotifKind::TRPos2));
      p.second_marked = 4;
      return p;
    }
    default: throw std::invalid_argument("not a pattern pair kind");
  }
}

}  // namespace

std::string MotifSpec::name() const {
  switch (kind) {
    case MotifKind::Cycle: return "cycle" + std::to_string(length);
    case MotifKind::Path: return "path" + std::to_string(length);
    case MotifKind::TailedTriangle: return "tailed_triangle";
    case MotifKind::ChordalCyclePos1: return "chordal_cycle_cc1";
    case MotifKind::ChordalCyclePos2: return "chordal_cycle_cc2";
    case MotifKind::TRPos1: return "tr1";
    case MotifKind::TRPos2: return "tr2";
    case MotifKind::TRPos3: return "tr3";
    case MotifKind::Clique4: return "clique4";
  }
  return "?";
}

std::optional<MotifSpec> MotifSpec::parse(std::string_view name) {
  auto numbered = [&](std::string_view prefix, MotifKind kind, int min_len) -> std::optional<MotifSpec> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto digits = name.substr(prefix.size());
    int len = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), len);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || len < min_len)
      return std::nullopt;
    return MotifSpec{kind, len};
  };
  if (auto s = numbered("cycle", MotifKind::Cycle, 3)) return s;
  if (auto s = numbered("path", MotifKind::Path, 1)) return s;
  for (auto kind : {MotifKind::TailedTriangle, MotifKind::ChordalCyclePos1, MotifKind::ChordalCyclePos2,
                    MotifKind::TRPos1, MotifKind::TRPos2, MotifKind::TRPos3, MotifKind::Clique4})
    if (MotifSpec::of(kind).name() == name) return MotifSpec::of(kind);
  return std::nullopt;
}

Pattern motif_pattern(const MotifSpec& spec) {
  switch (spec.kind) {
    case MotifKind::TailedTriangle: return {4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}, 0};
    case MotifKind::ChordalCyclePos1: return {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}, 0};
    case MotifKind::ChordalCyclePos2: return {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}, 1};
    case MotifKind::TRPos1: return {5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 2}}, 0};
    case MotifKind::TRPos2: return {5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 2}}, 1};
    case MotifKind::TRPos3: return {5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 2}}, 3};
    case MotifKind::Clique4: return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 0};
    case MotifKind::Cycle: {
      Pattern p{spec.length, {}, 0};
      for (int i = 0; i < spec.length; ++i) p.edges.emplace_back(i, (i + 1) % spec.length);
      return p;
    }
    case MotifKind::Path: {
      Pattern p{spec.length + 1, {}, 0};
      for (int i = 0; i < spec.length; ++i) p.edges.emplace_back(i, i + 1);
      return p;
    }
  }
  throw std::invalid_argument("unknown motif");
}

std::int64_t marked_orbit_size(const Pattern& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.num_nodes));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : p.edges) edges.emplace(std::min(a, b), std::max(a, b));
  std::set<int> orbit;
  do {
    bool automorphism = true;
    for (auto [a, b] : p.edges) {
      const int x = perm[a], y = perm[b];
      if (!edges.contains({std::min(x, y), std::max(x, y)})) {
        automorphism = false;
        break;
      }
    }
    if (automorphism) orbit.insert(perm[p.marked]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::int64_t>(orbit.size());
}

Count node_count(const Graph& g, const MotifSpec& spec, NodeId u, const OracleOptions& opts) {
  check_size(g, opts);
  if (u >= g.num_nodes()) throw std::out_of_range("oracle: node out of range");
  switch (spec.kind) {
    case MotifKind::Cycle: {
      if (spec.length < 3) throw std::invalid_argument("cycle length must be >= 3");
      std::set<Signature> cycles;
      for_each_simple_path(g, u, spec.length - 1, [&](const std::vector<NodeId>& path) {
        if (g.has_edge(path.back(), u)) cycles.insert(cycle_signature(path));
      });
      return static_cast<Count>(cycles.size());
    }
    case MotifKind::Path: {
      Count total = 0;
      for_each_simple_path(g, u, spec.length, [&](const std::vector<NodeId>&) { ++total; });
      return total;
    }
    default: return count_embeddings(g, motif_pattern(spec), u, std::nullopt);
  }
}

std::vector<Count> node_counts(const Graph& g, const MotifSpec& spec, const OracleOptions& opts) {
  std::vector<Count> out(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) out[u] = node_count(g, spec, u, opts);
  return out;
}

Count graph_count(const Graph& g, const MotifSpec& spec, const OracleOptions& opts) {
  check_size(g, opts);
  if (spec.kind == MotifKind::Cycle) {
    // Each cycle is found from its smallest vertex, once per orientation.
    Count closed = 0;
    const int len = spec.length;
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
      std::vector<NodeId> path{s};
      std::vector<char> on_path(g.num_nodes(), 0);
      on_path[s] = 1;
      std::function<void()> extend = [&]() {
        const NodeId last = path.back();
        if (static_cast<int>(path.size()) == len) {
          if (g.has_edge(last, s)) ++closed;
          return;
        }
        for (NodeId y : g.neighbors(last)) {
          if (y <= s || on_path[y]) continue;
          on_path[y] = 1;
          path.push_back(y);
          extend();
          path.pop_back();
          on_path[y] = 0;
        }
      };
      extend();
    }
    return closed / 2;
  }
  // Other motifs: union of all images over every start vertex.
  std::set<Signature> all;
  const Pattern p = motif_pattern(spec);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (spec.kind == MotifKind::Path) {
      for_each_simple_path(g, u, spec.length, [&](const std::vector<NodeId>& path) {
        Signature sig;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) sig.push_back(edge_key(path[i], path[i + 1]));
        std::sort(sig.begin(), sig.end());
        all.insert(sig);
      });
      continue;
    }
    collect_embeddings(g, p, u, std::nullopt, all);
  }
  return static_cast<Count>(all.size());
}

Count pair_count(const Graph& g, const PairQuery& q, NodeId u, NodeId v, const OracleOptions& opts) {
  check_size(g, opts);
  if (u >= g.num_nodes() || v >= g.num_nodes()) throw std::out_of_range("oracle: node out of range");
  switch (q.kind) {
    case PairKind::Path: {
      Count total = 0;
      for_each_simple_path(g, u, q.k, [&](const std::vector<NodeId>& path) {
        if (path.back() == v) ++total;
      });
      return total;
    }
    case PairKind::Walk: {
      std::vector<Count> cur(g.num_nodes(), 0);
      cur[u] = 1;
      for (int step = 0; step < q.k; ++step) {
        std::vector<Count> next(g.num_nodes(), 0);
        for (NodeId x = 0; x < g.num_nodes(); ++x)
          for (NodeId y : g.neighbors(x)) next[y] += cur[x];
        cur.swap(next);
      }
      return cur[v];
    }
    case PairKind::Cycle: {
      if (u == v || q.k < 1 || q.l < 1 || q.k + q.l < 3) return 0;
      std::vector<std::vector<NodeId>> first, second;
      for_each_simple_path(g, u, q.k, [&](const std::vector<NodeId>& p) {
        if (p.back() == v) first.push_back(p);
      });
      for_each_simple_path(g, u, q.l, [&](const std::vector<NodeId>& p) {
        if (p.back() == v) second.push_back(p);
      });
      std::set<Signature> cycles;
      for (const auto& a : first)
        for (const auto& b : second) {
          bool disjoint = true;
          for (std::size_t i = 1; i + 1 < a.size() && disjoint; ++i)
            for (std::size_t j = 1; j + 1 < b.size(); ++j)
              if (a[i] == b[j]) {
                disjoint = false;
                break;
              }
          if (!disjoint) continue;
          std::vector<NodeId> walk(a.begin(), a.end());
          walk.insert(walk.end(), b.rbegin() + 1, b.rend() - 1);
          cycles.insert(cycle_signature(walk));
        }
      return static_cast<Count>(cycles.size());
    }
    default: {
      if (u == v) return 0;
      return count_embeddings(g, pair_pattern(q.kind), u, v);
    }
  }
}

std::vector<std::vector<Count>> walk_matrix(const Graph& g, int k) {
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<Count>> adj(n, std::vector<Count>(n, 0));
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = 0; b < n; ++b) adj[a][b] = g.has_edge(a, b) ? 1 : 0;
  std::vector<std::vector<Count>> power(n, std::vector<Count>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<Count>> next(n, std::vector<Count>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t x = 0; x < n; ++x) next[i][j] += power[i][x] * adj[x][j];
    power.swap(next);
  }
  return power;
}

}  // namespace drfwl::oracle
