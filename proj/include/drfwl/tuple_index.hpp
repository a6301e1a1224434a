#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "drfwl/graph.hpp"

namespace drfwl {

using TupleId = std::uint32_t;

struct TupleRecord {
  NodeId u;
  NodeId v;
  std::uint8_t distance;
};

/// All ordered pairs (u, v) with d(u, v) <= max_distance, with ids assigned
/// in (u, distance, v) lexicographic order. The records owned by node u are
/// contiguous: [u itself, N_1(u) sorted, ..., N_d(u) sorted].
class TupleIndex {
 public:
  static TupleIndex build(const Graph& g, int max_distance);

  int max_distance() const { return max_distance_; }
  NodeId num_nodes() const { return num_nodes_; }
  std::size_t size() const { return records_.size(); }

  const TupleRecord& tuple(TupleId id) const { return records_[id]; }
  std::span<const TupleRecord> tuples() const { return records_; }

  /// Id range [first, last) of the tuples whose first node is u.
  TupleId first_of(NodeId u) const { return static_cast<TupleId>(layer_begin_[layer_slot(u, 0)]); }
  TupleId last_of(NodeId u) const { return static_cast<TupleId>(layer_begin_[layer_slot(u + 1, 0)]); }
  /// Id range of the tuples (u, v) with d(u, v) == k.
  TupleId first_of(NodeId u, int k) const { return static_cast<TupleId>(layer_begin_[layer_slot(u, k)]); }
  TupleId last_of(NodeId u, int k) const { return static_cast<TupleId>(layer_begin_[layer_slot(u, k) + 1]); }

  /// N_k(u) sorted; N_0(u) = {u}.
  std::span<const NodeId> hop(NodeId u, int k) const {
    return {second_.data() + first_of(u, k), second_.data() + last_of(u, k)};
  }

  std::optional<TupleId> find(NodeId u, NodeId v) const;
  /// Like find, but the pair must be present.
  TupleId id(NodeId u, NodeId v) const;
  std::optional<int> distance(NodeId u, NodeId v) const;

  std::vector<NodeId> intersect(NodeId u, NodeId v, int i, int j) const;

  /// Calls fn(w) for each w in N_i(u) ∩ N_j(v), ascending.
  template <class Fn>
  void for_each_common(NodeId u, NodeId v, int i, int j, Fn&& fn) const {
    auto a = hop(u, i);
    auto b = hop(v, j);
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
      if (a[x] < b[y]) {
        ++x;
      } else if (b[y] < a[x]) {
        ++y;
      } else {
        fn(a[x]);
        ++x;
        ++y;
      }
    }
  }

  /// Reference upper bound n * (1 + sum_{k=1..d} deg_max^k).
  static std::uint64_t size_bound(const Graph& g, int max_distance);

 private:
  std::size_t layer_slot(NodeId u, int k) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(max_distance_ + 1) + static_cast<std::size_t>(k);
  }

  int max_distance_ = 0;
  NodeId num_nodes_ = 0;
  std::vector<TupleRecord> records_;
  std::vector<NodeId> second_;           // second_[id] == records_[id].v
  std::vector<std::size_t> layer_begin_;  // per (u, k) start; one trailing sentinel
  // Per node, (v, id) sorted by v, laid out in the same ranges as records_.
  std::vector<std::pair<NodeId, TupleId>> lookup_;
};

}  // namespace drfwl
