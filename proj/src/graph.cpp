#include "drfwl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "drfwl/error.hpp"
#include "rng.hpp"

namespace drfwl {

Graph Graph::from_edges(NodeId num_nodes, std::span<const Edge> edges) {
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(num_nodes) + 1, 0);
  for (const auto& e : directed) ++g.offsets_[e.first + 1];
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.reserve(directed.size());
  for (const auto& e : directed) g.adjacency_.push_back(e.second);
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (NodeId v = 0; v < num_nodes(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

KHopSets khop(const Graph& g, NodeId v, int d) {
  if (v >= g.num_nodes()) throw std::out_of_range("khop: node " + std::to_string(v) + " out of range");
  if (d < 1) throw std::invalid_argument("khop: distance must be >= 1");
  KHopSets out;
  out.owner = v;
  out.layers.resize(static_cast<std::size_t>(d));

  // Small frontier BFS with a visited list that is rolled back afterwards
  // would be cheaper for huge graphs; a dense mark vector is fine here.
  std::vector<char> seen(g.num_nodes(), 0);
  seen[v] = 1;
  std::vector<NodeId> frontier{v};
  for (int k = 0; k < d && !frontier.empty(); ++k) {
    auto& layer = out.layers[static_cast<std::size_t>(k)];
    for (NodeId x : frontier)
      for (NodeId y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          layer.push_back(y);
        }
    std::sort(layer.begin(), layer.end());
    frontier = layer;
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    for (NodeId y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.num_nodes() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
}

int diameter(const Graph& g) {
  if (g.num_nodes() == 0) return -1;
  int best = 0;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    for (int x : bfs_distances(g, s)) {
      if (x < 0) return -1;
      best = std::max(best, x);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

NodeId parse_id(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  if (value >= std::numeric_limits<NodeId>::max())
    throw ParseError(line, "node id " + std::string(token) + " is too large");
  return static_cast<NodeId>(value);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::uint64_t node_count = 0;
  bool seen_content = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;

    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto tokens = split_tokens(line);
    if (!seen_content && tokens.size() == 2 && tokens[0] == "n") {
      seen_content = true;
      node_count = std::max<std::uint64_t>(node_count, parse_id(tokens[1], line_no));
      if (end == text.size()) break;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) throw ParseError(line_no, "expected two node ids per line");
    const NodeId u = parse_id(tokens[0], line_no);
    const NodeId v = parse_id(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop on node " + std::to_string(u));
    edges.emplace_back(u, v);
    node_count = std::max<std::uint64_t>(node_count, std::uint64_t{std::max(u, v)} + 1);
    if (end == text.size()) break;
  }
  return Graph::from_edges(static_cast<NodeId>(node_count), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.num_nodes() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

// ---------------------------------------------------------------------------
// Generators

Graph gen_cycle(NodeId n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph gen_path(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph gen_complete(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph gen_star(NodeId leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph gen_petersen() {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, edges);
}

Graph gen_disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  NodeId offset = 0;
  for (const auto& g : parts) {
    for (auto [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
    offset += g.num_nodes();
  }
  return Graph::from_edges(offset, edges);
}

Graph gen_erdos_renyi(NodeId n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_erdos_renyi: p must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (detail::uniform_unit(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph gen_random_regular(NodeId n, NodeId r, std::uint64_t seed) {
  if (r >= n || (std::uint64_t{n} * r) % 2 != 0)
    throw std::invalid_argument("gen_random_regular: need r < n and n*r even");
  constexpr int kRestarts = 200;
  constexpr int kPairTries = 100;
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    // Incremental pairing: draw two free stubs, keep the pair if it is a new
    // non-loop edge, restart when stuck.
    std::vector<NodeId> stubs;
    stubs.reserve(std::size_t{n} * r);
    for (NodeId v = 0; v < n; ++v) stubs.insert(stubs.end(), r, v);
    std::vector<std::vector<NodeId>> adj(n);
    std::vector<Edge> edges;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      stuck = true;
      for (int t = 0; t < kPairTries; ++t) {
        const std::size_t i = detail::uniform_below(rng, stubs.size());
        const std::size_t j = detail::uniform_below(rng, stubs.size());
        const NodeId a = stubs[i], b = stubs[j];
        if (i == j || a == b || std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
        edges.emplace_back(a, b);
        for (std::size_t idx : {std::max(i, j), std::min(i, j)}) {
          stubs[idx] = stubs.back();
          stubs.pop_back();
        }
        stuck = false;
        break;
      }
    }
    if (!stuck) return Graph::from_edges(n, edges);
  }
  throw std::runtime_error("gen_random_regular: retry budget exhausted");
}

std::pair<Graph, Graph> gen_separation_pair(int d) {
  if (d < 1) throw std::invalid_argument("gen_separation_pair: d must be >= 1");
  const auto k = static_cast<NodeId>(3 * d + 1);
  const Graph parts[] = {gen_cycle(k), gen_cycle(k)};
  return {gen_disjoint_union(parts), gen_cycle(2 * k)};
}

Graph permute(const Graph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.num_nodes()) throw std::invalid_argument("permute: size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.num_nodes(), edges);
}

std::vector<NodeId> random_permutation(NodeId n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[detail::uniform_below(rng, i)]);
  return perm;
}

}  // namespace drfwl
