#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drfwl/graph.hpp"
#include "drfwl/parallel.hpp"
#include "drfwl/tuple_index.hpp"

namespace drfwl {

enum class Method { WL1, FWL2, DRFWL };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

/// (i, j, k): the tuple distance k may read distance-i and distance-j tuples.
using Triple = std::array<int, 3>;
using Mask = std::vector<Triple>;

bool is_admissible(const Triple& t, int d);
/// All admissible triples for distance cap d, ascending.
Mask full_mask(int d);
/// Parses "i,j,k;i,j,k;..." (whitespace tolerated).
Mask parse_mask(std::string_view text);

struct RefineOptions {
  ExecPolicy exec{};
  std::size_t dense_cap = 256;  // largest n accepted by fwl2_refine
};

struct Coloring {
  Method method = Method::WL1;
  int max_distance = 0;            // DRFWL only
  std::vector<std::uint32_t> colors;  // dense ids, one per unit
  std::size_t num_colors = 0;
  int iterations = 0;              // refining rounds until stable
  std::vector<std::size_t> class_history;  // class count after each round, starting at round 0
};

/// Histogram of stable colors. Color ids are ranks of exact keys, so they do
/// not depend on node labels.
struct Certificate {
  Method method = Method::WL1;
  int max_distance = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> histogram;  // (color, count), by color

  bool operator==(const Certificate&) const = default;

  /// "v1;<method>;<d>;c:n,c:n,..."
  std::string serialize() const;
  static Certificate parse(std::string_view text);
};

Coloring wl1_refine(const Graph& g, const RefineOptions& opts = {});
Coloring fwl2_refine(const Graph& g, const RefineOptions& opts = {});
Coloring drfwl_refine(const Graph& g, int d, const std::optional<Mask>& mask = std::nullopt,
                      const RefineOptions& opts = {});
Coloring drfwl_refine(const TupleIndex& idx, const std::optional<Mask>& mask = std::nullopt,
                      const RefineOptions& opts = {});

Certificate certificate(const Coloring& c);

struct DistinguishParams {
  Method method = Method::DRFWL;
  int d = 2;
  std::optional<Mask> mask;
  RefineOptions opts{};
};

struct DistinguishResult {
  bool distinguished = false;
  int iterations = 0;   // rounds on the disjoint union
  Certificate first;    // color multiset of units inside g1
  Certificate second;   // same for g2
};

/// Refines the disjoint union of g1 and g2 and compares the color multisets
/// of the units lying inside each part.
DistinguishResult distinguish(const Graph& g1, const Graph& g2, const DistinguishParams& params);

namespace reference {

/// Straightforward dense DRFWL: all-pairs distances, every w scanned for
/// every tuple, std::map compression. Serial; kept to cross-check the
/// sparse kernel. Colors are returned in TupleIndex id order.
Coloring drfwl_refine_dense(const Graph& g, int d, const std::optional<Mask>& mask = std::nullopt);

}  // namespace reference

}  // namespace drfwl
