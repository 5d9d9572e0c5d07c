#include "balsat/small_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace balsat::small {

BitGraph::BitGraph(std::size_t vertices) : n(vertices) {
  if (vertices > kMaxVertices) throw std::invalid_argument("BitGraph supports at most 64 vertices");
}

BitGraph BitGraph::from(const Hypergraph& g) {
  if (g.uniformity() != 2) throw std::invalid_argument("BitGraph needs a graph (r = 2)");
  BitGraph b(g.num_vertices());
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const auto ev = g.edge(e);
    b.add(ev[0], ev[1]);
  }
  return b;
}

Hypergraph BitGraph::to_hypergraph() const {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (has(u, v)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Hypergraph(n, 2, std::move(edges));
}

std::size_t BitGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n; ++v) twice += degree(v);
  return twice / 2;
}

PatternMatcher::PatternMatcher(const Hypergraph& pattern) : h_(pattern.num_vertices()) {
  if (pattern.uniformity() != 2) throw std::invalid_argument("PatternMatcher needs a graph pattern");
  if (h_ > kMaxVertices) throw std::invalid_argument("pattern too large");
  for (EdgeIndex e = 0; e < pattern.num_edges(); ++e) {
    const auto ev = pattern.edge(e);
    edges_.push_back({ev[0], ev[1]});
    pattern_adj_[ev[0]] |= Row{1} << ev[1];
    pattern_adj_[ev[1]] |= Row{1} << ev[0];
  }
  for (const auto& [a, b] : edges_) {
    for (int flip = 0; flip < 2; ++flip) {
      const std::size_t first = flip ? b : a;
      const std::size_t second = flip ? a : b;
      std::vector<std::size_t> order{first, second};
      Row placed = (Row{1} << first) | (Row{1} << second);
      while (order.size() < h_) {
        int best_links = -1;
        std::size_t best = 0;
        for (std::size_t x = 0; x < h_; ++x) {
          if ((placed >> x) & 1U) continue;
          const int links = std::popcount(pattern_adj_[x] & placed);
          if (links > best_links) {
            best_links = links;
            best = x;
          }
        }
        order.push_back(best);
        placed |= Row{1} << best;
      }
      orders_.push_back(std::move(order));
    }
  }
}

bool PatternMatcher::extend(const BitGraph& g, const std::vector<std::size_t>& order, std::size_t depth,
                            std::array<std::size_t, kMaxVertices>& image, Row used) const {
  if (depth == order.size()) return true;
  const std::size_t x = order[depth];
  Row candidates = g.all() & ~used;
  for (std::size_t i = 0; i < depth; ++i) {
    if ((pattern_adj_[x] >> order[i]) & 1U) candidates &= g.adj[image[order[i]]];
  }
  while (candidates) {
    const auto y = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    image[x] = y;
    if (extend(g, order, depth + 1, image, used | (Row{1} << y))) return true;
  }
  return false;
}

bool PatternMatcher::contains_through_edge(const BitGraph& g, std::size_t u, std::size_t v) const {
  if (h_ > g.n) return false;
  std::array<std::size_t, kMaxVertices> image{};
  for (const auto& order : orders_) {
    image[order[0]] = u;
    image[order[1]] = v;
    if (extend(g, order, 2, image, (Row{1} << u) | (Row{1} << v))) return true;
  }
  return false;
}

bool PatternMatcher::contains(const BitGraph& g) const {
  for (std::size_t u = 0; u < g.n; ++u) {
    Row higher = g.adj[u] & ~((Row{2} << u) - 1);
    while (higher) {
      const auto v = static_cast<std::size_t>(std::countr_zero(higher));
      higher &= higher - 1;
      if (contains_through_edge(g, u, v)) return true;
    }
  }
  return false;
}

namespace {

using Colouring = std::vector<std::uint32_t>;

// Refines to the coarsest equitable colouring finer than `colour`. Colours are ranks
// of label-free signatures, so the result commutes with vertex relabeling.
void refine(const BitGraph& g, Colouring& colour) {
  const std::size_t n = g.n;
  std::size_t cells = 0;
  {
    Colouring sorted = colour;
    std::sort(sorted.begin(), sorted.end());
    cells = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  while (true) {
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.push_back(colour[v]);
      std::vector<std::uint32_t> nbr;
      Row row = g.adj[v];
      while (row) {
        nbr.push_back(colour[static_cast<std::size_t>(std::countr_zero(row))]);
        row &= row - 1;
      }
      std::sort(nbr.begin(), nbr.end());
      s.insert(s.end(), nbr.begin(), nbr.end());
      sig[v].second = v;
    }
    std::sort(sig.begin(), sig.end());
    std::uint32_t rank = 0;
    Colouring next(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
      next[sig[i].second] = rank;
    }
    const std::size_t next_cells = n == 0 ? 0 : rank + 1;
    colour = std::move(next);
    if (next_cells == cells) return;
    cells = next_cells;
  }
}

struct CanonSearch {
  const BitGraph& g;
  std::size_t leaf_cap;
  std::size_t leaves = 0;
  bool aborted = false;
  std::optional<std::vector<Row>> best;

  void visit(Colouring colour) {
    if (aborted) return;
    refine(g, colour);
    const std::size_t n = g.n;
    // First non-singleton cell (smallest colour with multiplicity > 1).
    std::vector<std::uint32_t> count(n + 1, 0);
    for (auto c : colour) ++count[c];
    std::optional<std::uint32_t> target;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (!target) {
      if (++leaves > leaf_cap) {
        aborted = true;
        return;
      }
      std::vector<Row> rows(n, 0);
      for (std::size_t v = 0; v < n; ++v) {
        Row row = g.adj[v];
        Row mapped = 0;
        while (row) {
          mapped |= Row{1} << colour[static_cast<std::size_t>(std::countr_zero(row))];
          row &= row - 1;
        }
        rows[colour[v]] = mapped;
      }
      if (!best || rows < *best) best = std::move(rows);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] != *target) continue;
      Colouring split(n);
      for (std::size_t u = 0; u < n; ++u) {
        split[u] = 2 * colour[u] + ((colour[u] == *target && u != v) ? 1 : 0);
      }
      visit(std::move(split));
      if (aborted) return;
    }
  }
};

}  // namespace

std::optional<std::vector<Row>> canonical_form(const BitGraph& g, std::size_t leaf_cap) {
  CanonSearch search{g, leaf_cap, 0, false, std::nullopt};
  search.visit(Colouring(g.n, 0));
  if (search.aborted) return std::nullopt;
  if (!search.best) return std::vector<Row>{};
  return search.best;
}

}  // namespace balsat::small
