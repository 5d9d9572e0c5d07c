#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace balsat {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// A sorted r-set of vertex ids.
using Edge = std::vector<Vertex>;

/// Strictly increasing indices into the edge list of a fixed Hypergraph.
using EdgeSet = std::vector<EdgeIndex>;

bool is_valid_edge_set(const EdgeSet& set, std::size_t num_edges);

/// An n-vertex r-uniform hypergraph (r = 2 for graphs).
///
/// Edges are kept sorted lexicographically and deduplicated, so an edge index
/// is a stable identity for the lifetime of the value. Immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Normalizes and validates `edges`. Throws std::invalid_argument on r < 2,
  /// an edge of the wrong size, a repeated vertex, or a vertex id >= n.
  Hypergraph(std::size_t n, std::size_t r, std::vector<Edge> edges,
             std::size_t* duplicates_dropped = nullptr);

  std::size_t num_vertices() const { return n_; }
  std::size_t uniformity() const { return r_; }
  std::size_t num_edges() const { return edge_count_; }

  std::span<const Vertex> edge(EdgeIndex e) const {
    return {vertices_.data() + static_cast<std::size_t>(e) * r_, r_};
  }
  Edge edge_vector(EdgeIndex e) const;
  std::vector<Edge> edges() const;

  std::span<const EdgeIndex> incident(Vertex v) const { return incidence_[v]; }
  std::size_t degree(Vertex v) const { return incidence_[v].size(); }

  /// Index of the edge with exactly these (sorted) vertices, if present.
  std::optional<EdgeIndex> find_edge(std::span<const Vertex> sorted_vertices) const;
  bool has_edge(std::span<const Vertex> sorted_vertices) const {
    return find_edge(sorted_vertices).has_value();
  }

  /// Rebuilds incidence from the edge list and compares; used by tests.
  bool incidence_consistent() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 2;
  std::size_t edge_count_ = 0;
  std::vector<Vertex> vertices_;  // edge_count_ * r_ ids, row-major
  std::vector<std::vector<EdgeIndex>> incidence_;
};

struct BuildResult {
  Hypergraph graph;
  std::size_t duplicates_dropped = 0;
};

/// Validating constructor that also reports the number of duplicate edges dropped.
BuildResult build(std::size_t n, std::size_t r, std::vector<Edge> edges);

Hypergraph complete_graph(std::size_t n);
/// All r-subsets of n vertices.
Hypergraph complete_uniform(std::size_t n, std::size_t r);
/// Parts are {0..a-1} and {a..a+b-1}.
Hypergraph complete_bipartite(std::size_t a, std::size_t b);
/// The cycle 0-1-...-(length-1)-0.
Hypergraph cycle(std::size_t length);
/// Path on `vertices` vertices (vertices - 1 edges).
Hypergraph path(std::size_t vertices);
/// 3-dimensional cube Q3; vertex ids are bit patterns.
Hypergraph cube_graph();

/// Each of the C(n, r) candidate edges is kept independently with probability p.
Hypergraph gnp_sample(std::size_t n, double p, std::size_t r, std::uint64_t seed);

/// Uniform random w-subset of {0..n-1}, returned sorted.
std::vector<Vertex> uniform_vertex_subset(std::size_t n, std::size_t w, std::uint64_t seed);

/// Sub-hypergraph induced on `vertices` (sorted, distinct), relabeled 0..|vertices|-1
/// in the given order.
Hypergraph induced_subgraph(const Hypergraph& g, std::span<const Vertex> vertices);

/// Number of edges of g lying entirely inside `vertices`, without building the subgraph.
std::size_t induced_edge_count(const Hypergraph& g, std::span<const Vertex> vertices);

/// Applies vertex relabeling v -> perm[v].
Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm);

/// Sub-hypergraph formed by the given edges, on the vertices they span,
/// relabeled in increasing order. `spanned` receives the original ids.
Hypergraph edge_subgraph(const Hypergraph& g, const EdgeSet& edges,
                         std::vector<Vertex>* spanned = nullptr);

}  // namespace balsat
