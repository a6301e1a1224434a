#include "drfwl/counting.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "drfwl/error.hpp"

namespace drfwl {

namespace {

constexpr std::array kCatalog = {
    Substructure::Cycle3,          Substructure::Cycle4,          Substructure::Cycle5, Substructure::Cycle6,
    Substructure::Cycle7,          Substructure::Path2,           Substructure::Path3,  Substructure::Path4,
    Substructure::TailedTriangle,  Substructure::ChordalCycleCC1, Substructure::ChordalCycleCC2,
    Substructure::TR1,             Substructure::TR2,             Substructure::TR3,
};

/// Read-only view used by the passes: value of a per-tuple array at (u, w).
struct Lookup {
  const TupleIndex& idx;
  std::span<const Count> values;
  Count operator()(NodeId u, NodeId w) const { return values[idx.id(u, w)]; }
};

Count degree_of(const TupleIndex& idx, NodeId u) { return static_cast<Count>(idx.hop(u, 1).size()); }

/// Sum of f(v) over tuples (u, v) with lo <= d(u, v) <= hi.
template <class Fn>
Count sum_range(const TupleIndex& idx, NodeId u, int lo, int hi, Fn&& f) {
  Count total = 0;
  hi = std::min(hi, idx.max_distance());
  if (lo > hi) return 0;
  for (TupleId t = idx.first_of(u, lo); t < idx.last_of(u, hi); ++t) total += f(t, idx.tuple(t).v);
  return total;
}

void require_even(Count value, const char* what) {
  if (value % 2 != 0) throw std::logic_error(std::string("odd intermediate in ") + what);
}

}  // namespace

std::span<const Substructure> substructure_catalog() { return kCatalog; }

std::string_view substructure_name(Substructure s) {
  switch (s) {
    case Substructure::Cycle3: return "cycle3";
    case Substructure::Cycle4: return "cycle4";
    case Substructure::Cycle5: return "cycle5";
    case Substructure::Cycle6: return "cycle6";
    case Substructure::Cycle7: return "cycle7";
    case Substructure::Path2: return "path2";
    case Substructure::Path3: return "path3";
    case Substructure::Path4: return "path4";
    case Substructure::TailedTriangle: return "tailed_triangle";
    case Substructure::ChordalCycleCC1: return "chordal_cycle_cc1";
    case Substructure::ChordalCycleCC2: return "chordal_cycle_cc2";
    case Substructure::TR1: return "tr1";
    case Substructure::TR2: return "tr2";
    case Substructure::TR3: return "tr3";
  }
  return "?";
}

std::optional<Substructure> parse_substructure(std::string_view name) {
  for (auto s : kCatalog)
    if (substructure_name(s) == name) return s;
  return std::nullopt;
}

int required_distance(Substructure s) {
  switch (s) {
    case Substructure::Cycle3: return 1;
    case Substructure::Cycle7: return 3;
    default: return 2;
  }
}

Count position_factor(Substructure s) {
  switch (s) {
    case Substructure::Cycle3: return 3;
    case Substructure::Cycle4: return 4;
    case Substructure::Cycle5: return 5;
    case Substructure::Cycle6: return 6;
    case Substructure::Cycle7: return 7;
    case Substructure::Path2:
    case Substructure::Path3:
    case Substructure::Path4: return 2;
    case Substructure::TailedTriangle: return 1;
    case Substructure::ChordalCycleCC1: return 2;
    case Substructure::ChordalCycleCC2: return 2;
    case Substructure::TR1: return 1;
    case Substructure::TR2: return 2;
    case Substructure::TR3: return 2;
  }
  return 1;
}

const std::vector<Count>& NodeCounts::of(Substructure s) const {
  const std::vector<Count>* out = nullptr;
  switch (s) {
    case Substructure::Cycle3: out = &c3; break;
    case Substructure::Cycle4: out = &c4; break;
    case Substructure::Cycle5: out = &c5; break;
    case Substructure::Cycle6: out = &c6; break;
    case Substructure::Cycle7: out = &c7; break;
    case Substructure::Path2: out = &p2; break;
    case Substructure::Path3: out = &p3; break;
    case Substructure::Path4: out = &p4; break;
    case Substructure::TailedTriangle: out = &tailed; break;
    case Substructure::ChordalCycleCC1: out = &cc1; break;
    case Substructure::ChordalCycleCC2: out = &cc2; break;
    case Substructure::TR1: out = &tr1; break;
    case Substructure::TR2: out = &tr2; break;
    case Substructure::TR3: out = &tr3; break;
  }
  if (out == nullptr || (out->empty() && !degree.empty()))
    throw CapabilityError("'" + std::string(substructure_name(s)) + "' needs d >= " +
                          std::to_string(required_distance(s)));
  return *out;
}

// ---------------------------------------------------------------------------
// Pairwise passes

std::vector<Count> pairwise_p2(const TupleIndex& idx, const ExecPolicy& exec) {
  std::vector<Count> p2(idx.size(), 0);
  parallel_for(idx.size(), exec, [&](std::size_t t) {
    const auto& r = idx.tuple(static_cast<TupleId>(t));
    if (r.distance < 1 || r.distance > 2) return;
    Count c = 0;
    idx.for_each_common(r.u, r.v, 1, 1, [&](NodeId) { ++c; });
    p2[t] = c;
  });
  return p2;
}

std::vector<Count> node_triangles(const TupleIndex& idx, std::span<const Count> p2, const ExecPolicy& exec) {
  std::vector<Count> c3(idx.num_nodes(), 0);
  parallel_for(idx.num_nodes(), exec, [&](std::size_t ui) {
    const auto u = static_cast<NodeId>(ui);
    const Count twice = sum_range(idx, u, 1, 1, [&](TupleId t, NodeId) { return p2[t]; });
    require_even(twice, "C3");
    c3[u] = twice / 2;
  });
  return c3;
}

void pairwise_p3(const TupleIndex& idx, std::span<const Count> p2, std::vector<Count>& w3, std::vector<Count>& p3,
                 const ExecPolicy& exec) {
  if (idx.max_distance() < 2) throw CapabilityError("3-path counts need d >= 2");
  const Lookup P2{idx, p2};
  w3.assign(idx.size(), 0);
  p3.assign(idx.size(), 0);
  parallel_for(idx.size(), exec, [&](std::size_t t) {
    const auto& r = idx.tuple(static_cast<TupleId>(t));
    if (r.distance < 1 || r.distance > 3) return;
    const NodeId u = r.u, v = r.v;
    Count twice = 0;
    idx.for_each_common(u, v, 1, 1, [&](NodeId w) { twice += P2(u, w) + P2(w, v); });
    idx.for_each_common(u, v, 1, 2, [&](NodeId w) { twice += P2(w, v); });
    idx.for_each_common(u, v, 2, 1, [&](NodeId w) { twice += P2(u, w); });
    const Count degs = degree_of(idx, u) + degree_of(idx, v);
    if (r.distance == 1) twice += degs;
    require_even(twice, "W3");
    w3[t] = twice / 2;
    p3[t] = w3[t] - (r.distance == 1 ? degs - 1 : 0);
  });
}

void pairwise_p4(const TupleIndex& idx, std::span<const Count> p2, std::span<const Count> c3, std::vector<Count>& w4,
                 std::vector<Count>& p4, const ExecPolicy& exec) {
  if (idx.max_distance() < 2) throw CapabilityError("4-path counts need d >= 2");
  const Lookup P2{idx, p2};
  w4.assign(idx.size(), 0);
  p4.assign(idx.size(), 0);
  parallel_for(idx.size(), exec, [&](std::size_t t) {
    const auto& r = idx.tuple(static_cast<TupleId>(t));
    if (r.distance < 1) return;
    const NodeId u = r.u, v = r.v;
    // 4-walks u-a-w-b-v with w distinct from u and v.
    Count middle = 0;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        idx.for_each_common(u, v, i, j, [&](NodeId w) { middle += P2(u, w) * P2(w, v); });
    Count backtrack = 0;
    idx.for_each_common(u, v, 1, 1, [&](NodeId x) { backtrack += degree_of(idx, x) - 2; });
    const Count pair_p2 = p2[t];
    Count p = middle - backtrack;
    if (r.distance == 1) p -= 2 * c3[u] + 2 * c3[v] - 3 * pair_p2;
    p4[t] = p;
    w4[t] = middle + (degree_of(idx, u) + degree_of(idx, v)) * pair_p2;
  });
}

std::vector<Count> node_walks(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("node_walks: k must be >= 1");
  std::vector<Count> walks(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) walks[u] = static_cast<Count>(g.degree(u));
  for (int step = 1; step < k; ++step) {
    std::vector<Count> next(g.num_nodes(), 0);
    for (NodeId u = 0; u < g.num_nodes(); ++u)
      for (NodeId v : g.neighbors(u)) next[u] += walks[v];
    walks.swap(next);
  }
  return walks;
}

// ---------------------------------------------------------------------------
// Full pipeline

CountResult count_substructures(const Graph& g, int d, const ExecPolicy& exec) {
  return count_substructures(g, TupleIndex::build(g, d), exec);
}

CountResult count_substructures(const Graph& g, const TupleIndex& idx, const ExecPolicy& exec) {
  const std::size_t n = idx.num_nodes();
  const std::size_t m = idx.size();
  CountResult out;
  out.max_distance = idx.max_distance();
  PairStats& ps = out.pairs;
  NodeCounts& nc = out.nodes;

  nc.degree.resize(n);
  for (NodeId u = 0; u < n; ++u) nc.degree[u] = degree_of(idx, u);
  for (int k = 1; k <= 4; ++k) nc.walks.push_back(node_walks(g, k));

  ps.p2 = pairwise_p2(idx, exec);
  nc.c3 = node_triangles(idx, ps.p2, exec);
  if (idx.max_distance() < 2) return out;

  pairwise_p3(idx, ps.p2, ps.w3, ps.p3, exec);
  pairwise_p4(idx, ps.p2, nc.c3, ps.w4, ps.p4, exec);

  const Lookup P2{idx, ps.p2};
  const Lookup P3{idx, ps.p3};

  // Tailed triangles, chordal cycles, TR1, and the common-neighbour edge
  // count X(u, v) = #{ordered adjacent (w, z) : w, z in N1(u) ∩ N1(v)}.
  ps.t.assign(m, 0);
  ps.cc1.assign(m, 0);
  ps.cc2.assign(m, 0);
  ps.tr1.assign(m, 0);
  std::vector<Count> common_edges(m, 0);
  parallel_for(m, exec, [&](std::size_t t) {
    const auto& r = idx.tuple(static_cast<TupleId>(t));
    if (r.distance < 1 || r.distance > 2) return;
    const NodeId u = r.u, v = r.v;
    const Count pp = ps.p2[t];
    Count tail = 0, chord = 0, apex = 0;
    thread_local std::vector<NodeId> common;
    common.clear();
    idx.for_each_common(u, v, 1, 1, [&](NodeId w) {
      common.push_back(w);
      tail += P2(w, v);
      chord += P2(u, w) - 1;
      apex += P3(w, v);
    });
    ps.t[t] = tail - (r.distance == 1 ? pp : 0);
    if (r.distance == 1) {
      ps.cc1[t] = chord;
      ps.cc2[t] = pp * (pp - 1) / 2;
      ps.tr1[t] = apex - chord - pp * (pp - 1);
    }
    Count edges = 0;
    for (NodeId w : common) {
      auto nb = idx.hop(w, 1);
      std::size_t a = 0, b = 0;
      while (a < nb.size() && b < common.size()) {
        if (nb[a] < common[b]) {
          ++a;
        } else if (common[b] < nb[a]) {
          ++b;
        } else {
          ++edges;
          ++a;
          ++b;
        }
      }
    }
    common_edges[t] = edges;
  });

  const Lookup T{idx, ps.t};
  const Lookup CC1{idx, ps.cc1};

  // C23, TR2, C24 and the per-pair part of the 6-cycle sum.
  ps.c23.assign(m, 0);
  ps.tr2.assign(m, 0);
  ps.c24.assign(m, 0);
  std::vector<Count> six_partial(m, 0);
  parallel_for(m, exec, [&](std::size_t t) {
    const auto& r = idx.tuple(static_cast<TupleId>(t));
    if (r.distance < 1 || r.distance > 2) return;
    const NodeId u = r.u, v = r.v;
    const bool adjacent = r.distance == 1;
    const Count pp = ps.p2[t];
    const Count t_uv = ps.t[t];
    const Count t_vu = T(v, u);
    ps.c23[t] = pp * ps.p3[t] - t_uv - t_vu;
    ps.tr2[t] = (pp - 1) * t_vu - common_edges[t];

    // 6-cycles through u and v split into a 2-path and a 4-path.
    Count bd = -2 * pp * (pp - 1);
    Count c = 0;
    Count adjacent_fix = 0, chord = 0;
    idx.for_each_common(u, v, 1, 1, [&](NodeId x) {
      const Count ux = P2(u, x), xv = P2(x, v);
      bd += P3(x, v) + P3(u, x);
      c += ux * xv;
      adjacent_fix += ux + xv - 2;
      chord += ux - 1;
    });
    if (adjacent) {
      bd -= adjacent_fix;
      c -= chord + CC1(v, u) + pp;
    }
    six_partial[t] = pp * ps.p4[t] - bd - c;
    ps.c24[t] = six_partial[t] + common_edges[t];
  });

  // Node-level aggregation: each node sums its own tuple range in id order.
  nc.c4.assign(n, 0);
  nc.c5.assign(n, 0);
  nc.c6.assign(n, 0);
  nc.p2.assign(n, 0);
  nc.p3.assign(n, 0);
  nc.p4.assign(n, 0);
  nc.tailed.assign(n, 0);
  nc.cc1.assign(n, 0);
  nc.cc2.assign(n, 0);
  nc.tr1.assign(n, 0);
  nc.tr2.assign(n, 0);
  nc.tr3.assign(n, 0);
  nc.cc2_from_pairs.assign(n, 0);
  nc.tr2_from_pairs.assign(n, 0);
  nc.c6_from_pairs.assign(n, 0);
  const auto& w3u = nc.walks[2];
  const auto& w4u = nc.walks[3];
  parallel_for(n, exec, [&](std::size_t ui) {
    const auto u = static_cast<NodeId>(ui);
    const Count deg = nc.degree[u];

    const Count c4x2 = sum_range(idx, u, 1, 1, [&](TupleId t, NodeId) { return ps.p3[t]; });
    const Count c5x2 = sum_range(idx, u, 1, 1, [&](TupleId t, NodeId) { return ps.p4[t]; });
    require_even(c4x2, "C4");
    require_even(c5x2, "C5");
    nc.c4[u] = c4x2 / 2;
    nc.c5[u] = c5x2 / 2;

    nc.tailed[u] = sum_range(idx, u, 1, 1, [&](TupleId t, NodeId v) { return nc.c3[v] - ps.p2[t]; });

    const Count cc1x2 = sum_range(idx, u, 1, 1, [&](TupleId, NodeId v) { return CC1(v, u); });
    const Count cc2x2 = sum_range(idx, u, 1, 1, [&](TupleId t, NodeId) { return ps.cc1[t]; });
    const Count tr1x2 = sum_range(idx, u, 1, 1, [&](TupleId t, NodeId) { return ps.tr1[t]; });
    require_even(cc1x2, "CC1");
    require_even(cc2x2, "CC2");
    require_even(tr1x2, "TR1");
    nc.cc1[u] = cc1x2 / 2;
    nc.cc2[u] = cc2x2 / 2;
    nc.tr1[u] = tr1x2 / 2;
    nc.cc2_from_pairs[u] = sum_range(idx, u, 1, 1, [&](TupleId t, NodeId) { return ps.cc2[t]; });

    const Lookup TR1{idx, ps.tr1};
    nc.tr2[u] = sum_range(idx, u, 1, 1, [&](TupleId, NodeId v) { return TR1(v, u); });
    nc.tr2_from_pairs[u] = sum_range(idx, u, 1, 2, [&](TupleId t, NodeId) { return ps.tr2[t]; });
    nc.tr3[u] = sum_range(idx, u, 1, 2, [&](TupleId t, NodeId) { return (ps.p2[t] - 1) * ps.t[t]; }) - 2 * nc.cc1[u];

    const Count c6x2 = sum_range(idx, u, 1, 2, [&](TupleId t, NodeId) { return six_partial[t]; }) + 2 * nc.cc1[u];
    require_even(c6x2, "C6");
    nc.c6[u] = c6x2 / 2;
    const Count c24_sum = sum_range(idx, u, 1, 2, [&](TupleId t, NodeId) { return ps.c24[t]; });
    require_even(c24_sum, "C24");
    nc.c6_from_pairs[u] = c24_sum / 2;

    // Paths starting at u. Pairs beyond distance 2 are handled through walks.
    nc.p2[u] = sum_range(idx, u, 1, 2, [&](TupleId t, NodeId) { return ps.p2[t]; });
    const Count p3_near = sum_range(idx, u, 1, 2, [&](TupleId t, NodeId) { return ps.p3[t]; });
    const Count w3_near = sum_range(idx, u, 1, 2, [&](TupleId t, NodeId) { return ps.w3[t]; });
    nc.p3[u] = p3_near + (w3u[u] - 2 * nc.c3[u] - w3_near);
    const Count p4_near = sum_range(idx, u, 1, 2, [&](TupleId t, NodeId) { return ps.p4[t]; });
    const Count w4_near = sum_range(idx, u, 1, 2, [&](TupleId t, NodeId) { return ps.w4[t]; });
    nc.p4[u] = p4_near + (w4u[u] - (2 * nc.c4[u] + deg * deg + nc.p2[u]) - w4_near);
  });

  if (idx.max_distance() < 3) return out;

  // 7-cycles: pairs of a 3-path and a 4-path from u to v, minus the twelve
  // ways the two paths can share interior vertices.
  const Lookup C23{idx, ps.c23};
  nc.c7.assign(n, 0);
  parallel_for(n, exec, [&](std::size_t ui) {
    const auto u = static_cast<NodeId>(ui);
    const Count deg = nc.degree[u];
    const Count C3 = nc.c3[u], C5 = nc.c5[u], CCa = nc.cc1[u], CCb = nc.cc2[u];
    const Count TRa = nc.tr1[u], TRb = nc.tr2[u], TRc = nc.tr3[u], tt = nc.tailed[u];

    Count a = -4 * C5 - TRb, b = 0, c = 0, dd = 0, e = 0, f = -4 * C5 - TRc, g = 0, h = -4 * tt, k = 0;
    Count same_u = 0, same_v = 0, t_into = 0, main = 0;

    for (TupleId t = idx.first_of(u, 1); t < idx.last_of(u, 3); ++t) {
      const auto& r = idx.tuple(t);
      const NodeId v = r.v;
      main += ps.p3[t] * ps.p4[t];
      if (r.distance <= 2) {
        t_into += T(v, u);
        idx.for_each_common(u, v, 1, 1, [&](NodeId w) {
          const Count uw = P2(u, w), wv = P2(w, v);
          a += C23(w, v);
          b += uw * P3(w, v);
          c += uw * wv * (wv - 1);
          dd += uw * wv * (uw - 1);
          e += P3(u, w) * wv;
          f += C23(u, w);
          g += uw * wv;
          h += T(u, w);
          k += uw * wv;
          if (r.distance == 1) {
            same_u += uw * (uw - 1);
            same_v += wv * (wv - 1);
          }
        });
      }
      idx.for_each_common(u, v, 1, 2, [&](NodeId w) {
        const Count uw = P2(u, w), wv = P2(w, v);
        a += C23(w, v);
        c += uw * wv * (wv - 1);
        k += uw * wv;
      });
      idx.for_each_common(u, v, 2, 1, [&](NodeId w) {
        const Count uw = P2(u, w), wv = P2(w, v);
        dd += uw * wv * (uw - 1);
        f += C23(u, w);
        g += uw * wv;
        h += T(u, w);
      });
    }
    b += -same_u - same_v + 2 * CCa - 2 * CCb - 4 * TRa - TRb;
    c += -2 * TRb - 4 * CCb - 4 * TRa - same_v;
    dd += -same_u - 4 * CCa - 4 * TRc;
    e += -2 * same_v + 2 * CCa - 2 * CCb - TRb - 2 * TRc;
    g += -2 * CCb - 4 * tt - 2 * C3;
    const Count i = 2 * TRa;
    const Count j = same_v - 4 * CCa;
    k += -t_into - 2 * CCa - 2 * C3 * (deg - 1);
    const Count l = TRc;

    const Count twice = main - (a + b + c + dd + e + f + g + h + i + j + k + l);
    require_even(twice, "C7");
    nc.c7[u] = twice / 2;
  });
  return out;
}

Count graph_level(const NodeCounts& counts, Substructure s) {
  Count total = 0;
  for (Count x : counts.of(s)) total += x;
  const Count factor = position_factor(s);
  if (total % factor != 0)
    throw std::logic_error("graph_level: sum for " + std::string(substructure_name(s)) +
                           " is not divisible by its position factor");
  return total / factor;
}

}  // namespace drfwl
