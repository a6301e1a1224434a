#include "drfwl/refinement.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "drfwl/error.hpp"

namespace drfwl {

namespace {

using Key = std::vector<std::uint32_t>;

std::uint64_t pack(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

/// Appends a sorted multiset of packed pairs as: distinct count, then
/// (first, second, multiplicity) per distinct pair. Sorts `items` in place.
void append_multiset(Key& key, std::vector<std::uint64_t>& items) {
  std::sort(items.begin(), items.end());
  const std::size_t count_pos = key.size();
  key.push_back(0);
  std::uint32_t distinct = 0;
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && items[j] == items[i]) ++j;
    key.push_back(static_cast<std::uint32_t>(items[i] >> 32));
    key.push_back(static_cast<std::uint32_t>(items[i]));
    key.push_back(static_cast<std::uint32_t>(j - i));
    ++distinct;
    i = j;
  }
  key[count_pos] = distinct;
}

/// Dense ranks of the keys in lexicographic order.
std::size_t compress(const std::vector<Key>& keys, std::vector<std::uint32_t>& colors) {
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  colors.assign(keys.size(), 0);
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++rank;
    colors[order[i]] = rank;
  }
  return keys.empty() ? 0 : rank + 1;
}

template <class Build>
Coloring run_refinement(Method method, int d, const std::vector<std::uint32_t>& initial, const ExecPolicy& exec,
                        Build&& build) {
  Coloring c;
  c.method = method;
  c.max_distance = d;
  const std::size_t units = initial.size();

  std::vector<Key> keys(units);
  for (std::size_t i = 0; i < units; ++i) keys[i] = {initial[i]};
  c.num_colors = compress(keys, c.colors);
  c.class_history.push_back(c.num_colors);

  std::vector<std::uint32_t> next;
  for (std::size_t round = 1;; ++round) {
    if (round > units + 1) throw std::logic_error("refinement exceeded its iteration cap");
    parallel_for(units, exec, [&](std::size_t i) {
      keys[i].clear();
      keys[i].push_back(c.colors[i]);
      build(i, c.colors, keys[i]);
    });
    const std::size_t count = compress(keys, next);
    if (count == c.num_colors) break;
    c.colors.swap(next);
    c.num_colors = count;
    c.iterations = static_cast<int>(round);
    c.class_history.push_back(count);
  }
  return c;
}

std::vector<std::uint64_t>& scratch() {
  thread_local std::vector<std::uint64_t> buffer;
  buffer.clear();
  return buffer;
}

/// active[k] lists the (i, j) pairs read by distance-k tuples.
std::vector<std::vector<std::pair<int, int>>> active_pairs(int d, const std::optional<Mask>& mask) {
  std::vector<std::vector<std::pair<int, int>>> active(static_cast<std::size_t>(d + 1));
  Mask triples = mask ? *mask : full_mask(d);
  for (const auto& t : triples)
    if (!is_admissible(t, d)) {
      throw std::invalid_argument("mask triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                  std::to_string(t[2]) + ") is not admissible for d=" + std::to_string(d));
    }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  for (const auto& [i, j, k] : triples) active[static_cast<std::size_t>(k)].emplace_back(i, j);
  for (auto& list : active) std::sort(list.begin(), list.end());
  return active;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::WL1: return "wl1";
    case Method::FWL2: return "fwl2";
    case Method::DRFWL: return "drfwl";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "wl1") return Method::WL1;
  if (name == "fwl2") return Method::FWL2;
  if (name == "drfwl") return Method::DRFWL;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

bool is_admissible(const Triple& t, int d) {
  const auto [i, j, k] = t;
  if (i < 0 || j < 0 || k < 0 || i > d || j > d || k > d) return false;
  return std::abs(i - j) <= k && k <= i + j;
}

Mask full_mask(int d) {
  Mask out;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k)
        if (is_admissible({i, j, k}, d)) out.push_back({i, j, k});
  return out;
}

Mask parse_mask(std::string_view text) {
  Mask out;
  std::string cleaned;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') cleaned.push_back(ch);
  std::string_view rest = cleaned;
  while (!rest.empty()) {
    const auto end = rest.find(';');
    const std::string_view item = rest.substr(0, end);
    rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end + 1);
    if (item.empty()) continue;
    Triple t{};
    std::size_t field = 0;
    const char* p = item.data();
    const char* last = item.data() + item.size();
    while (true) {
      if (field >= 3) throw std::invalid_argument("mask entry '" + std::string(item) + "' has more than 3 fields");
      auto [ptr, ec] = std::from_chars(p, last, t[field]);
      if (ec != std::errc()) throw std::invalid_argument("bad mask entry '" + std::string(item) + "'");
      ++field;
      if (ptr == last) break;
      if (*ptr != ',') throw std::invalid_argument("bad mask entry '" + std::string(item) + "'");
      p = ptr + 1;
    }
    if (field != 3) throw std::invalid_argument("mask entry '" + std::string(item) + "' needs 3 fields");
    out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------

Coloring wl1_refine(const Graph& g, const RefineOptions& opts) {
  const std::vector<std::uint32_t> initial(g.num_nodes(), 0);
  return run_refinement(Method::WL1, 0, initial, opts.exec,
                        [&](std::size_t v, const std::vector<std::uint32_t>& colors, Key& key) {
                          auto& items = scratch();
                          for (NodeId w : g.neighbors(static_cast<NodeId>(v))) items.push_back(colors[w]);
                          append_multiset(key, items);
                        });
}

Coloring fwl2_refine(const Graph& g, const RefineOptions& opts) {
  const std::size_t n = g.num_nodes();
  if (n > opts.dense_cap)
    throw SizeError("fwl2: n=" + std::to_string(n) + " exceeds dense cap " + std::to_string(opts.dense_cap));
  std::vector<std::uint32_t> initial(n * n, 2);
  for (std::size_t u = 0; u < n; ++u) {
    initial[u * n + u] = 0;
    for (NodeId v : g.neighbors(static_cast<NodeId>(u))) initial[u * n + v] = 1;
  }
  return run_refinement(Method::FWL2, 0, initial, opts.exec,
                        [&](std::size_t p, const std::vector<std::uint32_t>& colors, Key& key) {
                          const std::size_t u = p / n, v = p % n;
                          auto& items = scratch();
                          for (std::size_t w = 0; w < n; ++w) items.push_back(pack(colors[w * n + v], colors[u * n + w]));
                          append_multiset(key, items);
                        });
}

Coloring drfwl_refine(const Graph& g, int d, const std::optional<Mask>& mask, const RefineOptions& opts) {
  return drfwl_refine(TupleIndex::build(g, d), mask, opts);
}

Coloring drfwl_refine(const TupleIndex& idx, const std::optional<Mask>& mask, const RefineOptions& opts) {
  const int d = idx.max_distance();
  const auto active = active_pairs(d, mask);
  std::vector<std::uint32_t> initial(idx.size());
  for (std::size_t t = 0; t < idx.size(); ++t) initial[t] = idx.tuple(static_cast<TupleId>(t)).distance;

  return run_refinement(Method::DRFWL, d, initial, opts.exec,
                        [&](std::size_t t, const std::vector<std::uint32_t>& colors, Key& key) {
                          const TupleRecord& rec = idx.tuple(static_cast<TupleId>(t));
                          for (const auto& [i, j] : active[rec.distance]) {
                            auto& items = scratch();
                            idx.for_each_common(rec.u, rec.v, i, j, [&](NodeId w) {
                              items.push_back(pack(colors[idx.id(w, rec.v)], colors[idx.id(rec.u, w)]));
                            });
                            append_multiset(key, items);
                          }
                        });
}

// ---------------------------------------------------------------------------

namespace {

Certificate histogram_of(const Coloring& c, const std::vector<char>* keep) {
  Certificate cert;
  cert.method = c.method;
  cert.max_distance = c.max_distance;
  std::vector<std::uint64_t> counts(c.num_colors, 0);
  for (std::size_t i = 0; i < c.colors.size(); ++i)
    if (keep == nullptr || (*keep)[i]) ++counts[c.colors[i]];
  for (std::size_t col = 0; col < counts.size(); ++col)
    if (counts[col] > 0) cert.histogram.emplace_back(static_cast<std::uint32_t>(col), counts[col]);
  return cert;
}

}  // namespace

Certificate certificate(const Coloring& c) { return histogram_of(c, nullptr); }

std::string Certificate::serialize() const {
  std::ostringstream out;
  out << "v1;" << method_name(method) << ';' << max_distance << ';';
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    if (i > 0) out << ',';
    out << histogram[i].first << ':' << histogram[i].second;
  }
  return out.str();
}

Certificate Certificate::parse(std::string_view text) {
  auto fail = [&]() { return std::invalid_argument("malformed certificate '" + std::string(text) + "'"); };
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == ';') {
      fields.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  if (fields.size() != 4 || fields[0] != "v1") throw fail();
  Certificate cert;
  cert.method = parse_method(fields[1]);
  auto [p, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), cert.max_distance);
  if (ec != std::errc() || p != fields[2].data() + fields[2].size()) throw fail();
  std::string_view rest = fields[3];
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw fail();
    std::uint32_t color = 0;
    std::uint64_t count = 0;
    auto r1 = std::from_chars(item.data(), item.data() + colon, color);
    auto r2 = std::from_chars(item.data() + colon + 1, item.data() + item.size(), count);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != item.data() + colon ||
        r2.ptr != item.data() + item.size())
      throw fail();
    cert.histogram.emplace_back(color, count);
  }
  return cert;
}

DistinguishResult distinguish(const Graph& g1, const Graph& g2, const DistinguishParams& params) {
  const Graph parts[] = {g1, g2};
  const Graph joint = gen_disjoint_union(parts);
  const NodeId split = g1.num_nodes();

  Coloring c;
  std::vector<char> in_first, in_second;
  switch (params.method) {
    case Method::WL1: {
      c = wl1_refine(joint, params.opts);
      for (NodeId v = 0; v < joint.num_nodes(); ++v) {
        in_first.push_back(v < split);
        in_second.push_back(v >= split);
      }
      break;
    }
    case Method::FWL2: {
      c = fwl2_refine(joint, params.opts);
      const NodeId n = joint.num_nodes();
      for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v) {
          in_first.push_back(u < split && v < split);
          in_second.push_back(u >= split && v >= split);
        }
      break;
    }
    case Method::DRFWL: {
      const TupleIndex idx = TupleIndex::build(joint, params.d);
      c = drfwl_refine(idx, params.mask, params.opts);
      for (const auto& rec : idx.tuples()) {
        in_first.push_back(rec.u < split);
        in_second.push_back(rec.u >= split);
      }
      break;
    }
  }
  DistinguishResult result;
  result.iterations = c.iterations;
  result.first = histogram_of(c, &in_first);
  result.second = histogram_of(c, &in_second);
  result.distinguished = result.first != result.second;
  return result;
}

// ---------------------------------------------------------------------------

namespace reference {

Coloring drfwl_refine_dense(const Graph& g, int d, const std::optional<Mask>& mask) {
  const NodeId n = g.num_nodes();
  std::vector<std::vector<int>> dist(n);
  for (NodeId u = 0; u < n; ++u) dist[u] = bfs_distances(g, u);

  // Units in (u, k, v) order, matching TupleIndex ids.
  std::vector<std::pair<NodeId, NodeId>> units;
  std::vector<std::vector<std::int64_t>> unit_of(n, std::vector<std::int64_t>(n, -1));
  for (NodeId u = 0; u < n; ++u)
    for (int k = 0; k <= d; ++k)
      for (NodeId v = 0; v < n; ++v)
        if (dist[u][v] == k) {
          unit_of[u][v] = static_cast<std::int64_t>(units.size());
          units.emplace_back(u, v);
        }

  auto slot = [d](int i, int j, int k) { return static_cast<std::size_t>((i * (d + 1) + j) * (d + 1) + k); };
  std::vector<char> on(static_cast<std::size_t>((d + 1) * (d + 1) * (d + 1)), 0);
  for (const auto& t : mask ? *mask : full_mask(d)) {
    if (!is_admissible(t, d)) throw std::invalid_argument("mask triple is not admissible");
    on[slot(t[0], t[1], t[2])] = 1;
  }

  auto rank_keys = [](const std::vector<Key>& keys, std::vector<std::uint32_t>& colors) {
    std::map<Key, std::uint32_t> ranks;
    for (const auto& k : keys) ranks.emplace(k, 0);
    std::uint32_t next = 0;
    for (auto& entry : ranks) entry.second = next++;
    colors.clear();
    for (const auto& k : keys) colors.push_back(ranks.at(k));
    return ranks.size();
  };

  Coloring c;
  c.method = Method::DRFWL;
  c.max_distance = d;
  std::vector<Key> keys;
  for (auto [u, v] : units) keys.push_back({static_cast<std::uint32_t>(dist[u][v])});
  c.num_colors = rank_keys(keys, c.colors);
  c.class_history.push_back(c.num_colors);

  std::vector<std::uint32_t> next;
  for (int round = 1;; ++round) {
    for (std::size_t x = 0; x < units.size(); ++x) {
      const auto [u, v] = units[x];
      const int k = dist[u][v];
      Key key{c.colors[x]};
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
          if (!on[slot(i, j, k)]) continue;
          std::vector<std::uint64_t> items;
          for (NodeId w = 0; w < n; ++w)
            if (dist[u][w] == i && dist[w][v] == j)
              items.push_back(pack(c.colors[static_cast<std::size_t>(unit_of[w][v])],
                                   c.colors[static_cast<std::size_t>(unit_of[u][w])]));
          append_multiset(key, items);
        }
      keys[x] = std::move(key);
    }
    const std::size_t count = rank_keys(keys, next);
    if (count == c.num_colors) break;
    c.colors = next;
    c.num_colors = count;
    c.iterations = round;
    c.class_history.push_back(count);
  }
  return c;
}

}  // namespace reference

}  // namespace drfwl
