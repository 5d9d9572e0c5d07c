#include "balsat/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "balsat/rng.hpp"

namespace balsat {

bool is_valid_edge_set(const EdgeSet& set, std::size_t num_edges) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= num_edges) return false;
    if (i > 0 && set[i - 1] >= set[i]) return false;
  }
  return true;
}

Hypergraph::Hypergraph(std::size_t n, std::size_t r, std::vector<Edge> edges,
                       std::size_t* duplicates_dropped)
    : n_(n), r_(r) {
  if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
  for (auto& e : edges) {
    if (e.size() != r) {
      throw std::invalid_argument("edge has " + std::to_string(e.size()) +
                                  " vertices, expected " + std::to_string(r));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("edge repeats vertex " +
                                  std::to_string(*std::adjacent_find(e.begin(), e.end())));
    }
    if (e.back() >= n) {
      throw std::invalid_argument("vertex id " + std::to_string(e.back()) +
                                  " out of range for n = " + std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  if (duplicates_dropped) *duplicates_dropped = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());

  edge_count_ = edges.size();
  vertices_.reserve(edge_count_ * r_);
  incidence_.assign(n_, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (Vertex v : edges[i]) {
      vertices_.push_back(v);
      incidence_[v].push_back(static_cast<EdgeIndex>(i));
    }
  }
}

Edge Hypergraph::edge_vector(EdgeIndex e) const {
  const auto s = edge(e);
  return Edge(s.begin(), s.end());
}

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (EdgeIndex e = 0; e < edge_count_; ++e) out.push_back(edge_vector(e));
  return out;
}

std::optional<EdgeIndex> Hypergraph::find_edge(std::span<const Vertex> sorted_vertices) const {
  if (sorted_vertices.size() != r_) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = edge_count_;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto e = edge(static_cast<EdgeIndex>(mid));
    if (std::lexicographical_compare(e.begin(), e.end(), sorted_vertices.begin(),
                                     sorted_vertices.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < edge_count_) {
    const auto e = edge(static_cast<EdgeIndex>(lo));
    if (std::equal(e.begin(), e.end(), sorted_vertices.begin())) {
      return static_cast<EdgeIndex>(lo);
    }
  }
  return std::nullopt;
}

bool Hypergraph::incidence_consistent() const {
  std::vector<std::vector<EdgeIndex>> rebuilt(n_);
  for (EdgeIndex e = 0; e < edge_count_; ++e) {
    for (Vertex v : edge(e)) rebuilt[v].push_back(e);
  }
  return rebuilt == incidence_;
}

BuildResult build(std::size_t n, std::size_t r, std::vector<Edge> edges) {
  BuildResult result;
  result.graph = Hypergraph(n, r, std::move(edges), &result.duplicates_dropped);
  return result;
}

namespace {

// Visits all r-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return;
  Edge current(r);
  std::iota(current.begin(), current.end(), Vertex{0});
  while (true) {
    fn(static_cast<const Edge&>(current));
    std::size_t i = r;
    while (i > 0 && current[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++current[i - 1];
    for (std::size_t j = i; j < r; ++j) current[j] = current[j - 1] + 1;
  }
}

}  // namespace

Hypergraph complete_uniform(std::size_t n, std::size_t r) {
  std::vector<Edge> edges;
  for_each_combination(n, r, [&](const Edge& e) { edges.push_back(e); });
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph complete_graph(std::size_t n) {
  if (n < 2) throw std::invalid_argument("complete_graph: n must be at least 2");
  return complete_uniform(n, 2);
}

Hypergraph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: parts must be nonempty");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, static_cast<Vertex>(a + j)});
  }
  return Hypergraph(a + b, 2, std::move(edges));
}

Hypergraph cycle(std::size_t length) {
  if (length < 3) throw std::invalid_argument("cycle: length must be at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < length; ++i) {
    edges.push_back({i, static_cast<Vertex>((i + 1) % length)});
  }
  return Hypergraph(length, 2, std::move(edges));
}

Hypergraph path(std::size_t vertices) {
  if (vertices < 2) throw std::invalid_argument("path: needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1});
  return Hypergraph(vertices, 2, std::move(edges));
}

Hypergraph cube_graph() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v) {
    for (Vertex bit = 1; bit < 8; bit <<= 1) {
      if ((v & bit) == 0) edges.push_back({v, v | bit});
    }
  }
  return Hypergraph(8, 2, std::move(edges));
}

Hypergraph gnp_sample(std::size_t n, double p, std::size_t r, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp_sample: p must lie in [0, 1]");
  if (r < 2) throw std::invalid_argument("gnp_sample: r must be at least 2");
  Philox4x32 rng(seed);
  std::vector<Edge> edges;
  for_each_combination(n, r, [&](const Edge& e) {
    if (rng.uniform01() < p) edges.push_back(e);
  });
  return Hypergraph(n, r, std::move(edges));
}

std::vector<Vertex> uniform_vertex_subset(std::size_t n, std::size_t w, std::uint64_t seed) {
  if (w > n) {
    throw std::invalid_argument("uniform_vertex_subset: w = " + std::to_string(w) +
                                " exceeds n = " + std::to_string(n));
  }
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  Philox4x32 rng(seed);
  // Partial Fisher-Yates: the first w slots form a uniform w-subset.
  for (std::size_t i = 0; i < w; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(w);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Hypergraph induced_subgraph(const Hypergraph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> position(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.num_vertices() || position[vertices[i]] != -1) {
      throw std::invalid_argument("induced_subgraph: vertices must be distinct and in range");
    }
    position[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    Edge mapped;
    mapped.reserve(g.uniformity());
    for (Vertex v : g.edge(e)) {
      if (position[v] < 0) break;
      mapped.push_back(static_cast<Vertex>(position[v]));
    }
    if (mapped.size() == g.uniformity()) edges.push_back(std::move(mapped));
  }
  return Hypergraph(vertices.size(), g.uniformity(), std::move(edges));
}

std::size_t induced_edge_count(const Hypergraph& g, std::span<const Vertex> vertices) {
  std::vector<char> inside(g.num_vertices(), 0);
  for (Vertex v : vertices) inside[v] = 1;
  std::size_t count = 0;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const auto ev = g.edge(e);
    if (std::all_of(ev.begin(), ev.end(), [&](Vertex v) { return inside[v] != 0; })) ++count;
  }
  return count;
}

Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.num_vertices()) throw std::invalid_argument("relabel: wrong permutation size");
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    Edge mapped;
    for (Vertex v : g.edge(e)) mapped.push_back(perm[v]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph(g.num_vertices(), g.uniformity(), std::move(edges));
}

Hypergraph edge_subgraph(const Hypergraph& g, const EdgeSet& edges, std::vector<Vertex>* spanned) {
  std::vector<Vertex> verts;
  for (EdgeIndex e : edges) {
    if (e >= g.num_edges()) throw std::invalid_argument("edge_subgraph: edge index out of range");
    for (Vertex v : g.edge(e)) verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<Edge> mapped;
  for (EdgeIndex e : edges) {
    Edge m;
    for (Vertex v : g.edge(e)) {
      m.push_back(static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
    }
    mapped.push_back(std::move(m));
  }
  Hypergraph sub(verts.size(), g.uniformity(), std::move(mapped));
  if (spanned) *spanned = std::move(verts);
  return sub;
}

}  // namespace balsat
