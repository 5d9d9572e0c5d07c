#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "balsat/hypergraph.hpp"

namespace balsat::small {

using Row = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

/// Simple graph on at most 64 vertices as adjacency bit rows.
struct BitGraph {
  std::size_t n = 0;
  std::array<Row, kMaxVertices> adj{};

  explicit BitGraph(std::size_t vertices = 0);
  static BitGraph from(const Hypergraph& g);
  Hypergraph to_hypergraph() const;

  bool has(std::size_t u, std::size_t v) const { return (adj[u] >> v) & 1U; }
  void add(std::size_t u, std::size_t v) {
    adj[u] |= Row{1} << v;
    adj[v] |= Row{1} << u;
  }
  void remove(std::size_t u, std::size_t v) {
    adj[u] &= ~(Row{1} << v);
    adj[v] &= ~(Row{1} << u);
  }
  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj[v])); }
  std::size_t edge_count() const;
  Row all() const { return n == 64 ? ~Row{0} : (Row{1} << n) - 1; }
};

/// Subgraph containment tests for a fixed small pattern graph.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Hypergraph& pattern);

  /// True if some copy of the pattern in g uses the edge uv (which must be present).
  bool contains_through_edge(const BitGraph& g, std::size_t u, std::size_t v) const;
  bool contains(const BitGraph& g) const;

 private:
  bool extend(const BitGraph& g, const std::vector<std::size_t>& order, std::size_t depth,
              std::array<std::size_t, kMaxVertices>& image, Row used) const;

  std::size_t h_;
  std::vector<std::array<std::size_t, 2>> edges_;
  std::array<Row, kMaxVertices> pattern_adj_{};
  // One placement order per oriented anchor edge (2 * e(H) entries).
  std::vector<std::vector<std::size_t>> orders_;
};

/// Canonical adjacency rows via colour refinement and individualization, the minimum
/// relabeled adjacency over all leaves of the search tree. Returns nullopt when the
/// tree has more than `leaf_cap` leaves.
std::optional<std::vector<Row>> canonical_form(const BitGraph& g, std::size_t leaf_cap = 20000);

}  // namespace balsat::small
