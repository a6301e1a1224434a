#include "drfwl/tuple_index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace drfwl {

TupleIndex TupleIndex::build(const Graph& g, int max_distance) {
  if (max_distance < 1) throw std::invalid_argument("build_index: d must be >= 1");
  if (max_distance > 255) throw std::invalid_argument("build_index: d must be <= 255");

  TupleIndex idx;
  idx.max_distance_ = max_distance;
  idx.num_nodes_ = g.num_nodes();
  const std::size_t n = g.num_nodes();
  const auto slots = static_cast<std::size_t>(max_distance + 1);
  idx.layer_begin_.reserve(n * slots + 1);

  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const KHopSets sets = khop(g, u, max_distance);
    idx.layer_begin_.push_back(idx.records_.size());
    idx.records_.push_back({u, u, 0});
    for (int k = 1; k <= max_distance; ++k) {
      idx.layer_begin_.push_back(idx.records_.size());
      for (NodeId v : sets.at(k)) idx.records_.push_back({u, v, static_cast<std::uint8_t>(k)});
    }
  }
  idx.layer_begin_.push_back(idx.records_.size());
  if (idx.records_.size() >= std::numeric_limits<TupleId>::max())
    throw std::length_error("build_index: too many tuples");

  idx.second_.reserve(idx.records_.size());
  idx.lookup_.reserve(idx.records_.size());
  for (std::size_t id = 0; id < idx.records_.size(); ++id) {
    idx.second_.push_back(idx.records_[id].v);
    idx.lookup_.emplace_back(idx.records_[id].v, static_cast<TupleId>(id));
  }
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    std::sort(idx.lookup_.begin() + idx.first_of(u), idx.lookup_.begin() + idx.last_of(u));
  return idx;
}

std::optional<TupleId> TupleIndex::find(NodeId u, NodeId v) const {
  if (u >= num_nodes_ || v >= num_nodes_) return std::nullopt;
  auto first = lookup_.begin() + first_of(u);
  auto last = lookup_.begin() + last_of(u);
  auto it = std::lower_bound(first, last, v, [](const auto& entry, NodeId key) { return entry.first < key; });
  if (it == last || it->first != v) return std::nullopt;
  return it->second;
}

TupleId TupleIndex::id(NodeId u, NodeId v) const {
  auto found = find(u, v);
  if (!found) throw std::out_of_range("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not indexed");
  return *found;
}

std::optional<int> TupleIndex::distance(NodeId u, NodeId v) const {
  auto found = find(u, v);
  if (!found) return std::nullopt;
  return records_[*found].distance;
}

std::vector<NodeId> TupleIndex::intersect(NodeId u, NodeId v, int i, int j) const {
  if (u >= num_nodes_ || v >= num_nodes_) throw std::out_of_range("intersect: node out of range");
  if (i < 0 || j < 0 || i > max_distance_ || j > max_distance_)
    throw std::out_of_range("intersect: distance out of range");
  std::vector<NodeId> out;
  for_each_common(u, v, i, j, [&](NodeId w) { out.push_back(w); });
  return out;
}

std::uint64_t TupleIndex::size_bound(const Graph& g, int max_distance) {
  const std::uint64_t deg = g.max_degree();
  std::uint64_t per_node = 1, power = 1;
  for (int k = 1; k <= max_distance; ++k) {
    power *= deg;
    per_node += power;
  }
  return std::uint64_t{g.num_nodes()} * per_node;
}

}  // namespace drfwl
