#include "balsat/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace balsat {

namespace {

constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();
constexpr std::size_t kMaxUniformity = 16;

void check_uniformity(const Hypergraph& host, const Pattern& pattern) {
  if (host.uniformity() != pattern.r()) {
    throw std::invalid_argument("uniformity mismatch: host r = " + std::to_string(host.uniformity()) +
                                ", pattern r = " + std::to_string(pattern.r()));
  }
}

}  // namespace

std::size_t EdgeSetHash::operator()(const EdgeSet& s) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ s.size();
  for (EdgeIndex e : s) {
    h ^= e + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xFF51AFD7ED558CCDULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

ForbiddenIndex::ForbiddenIndex(std::size_t num_host_edges)
    : num_host_edges_(num_host_edges), by_edge_(num_host_edges) {}

bool ForbiddenIndex::insert(EdgeSet set) {
  if (!is_valid_edge_set(set, num_host_edges_)) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!is_valid_edge_set(set, num_host_edges_)) {
      throw std::invalid_argument("forbidden set references a missing host edge");
    }
  }
  if (lookup_.contains(set)) return false;
  const auto id = static_cast<std::uint32_t>(sets_.size());
  if (set.empty()) has_empty_ = true;
  for (EdgeIndex e : set) by_edge_[e].push_back(id);
  lookup_.insert(set);
  sets_.push_back(std::move(set));
  return true;
}

bool ForbiddenIndex::completed_by(EdgeIndex added, const std::vector<char>& in_partial) const {
  if (has_empty_) return true;
  for (std::uint32_t id : by_edge_[added]) {
    const EdgeSet& s = sets_[id];
    if (std::all_of(s.begin(), s.end(), [&](EdgeIndex e) { return in_partial[e] != 0; })) return true;
  }
  return false;
}

bool ForbiddenIndex::any_subset_of(const EdgeSet& edges) const {
  if (has_empty_) return true;
  for (EdgeIndex e : edges) {
    if (e >= num_host_edges_) continue;
    for (std::uint32_t id : by_edge_[e]) {
      const EdgeSet& s = sets_[id];
      if (s.front() != e) continue;  // each set is tested once, via its smallest edge
      if (std::includes(edges.begin(), edges.end(), s.begin(), s.end())) return true;
    }
  }
  return false;
}

std::size_t ForbiddenIndex::count_of_size(std::size_t k) const {
  return static_cast<std::size_t>(
      std::count_if(sets_.begin(), sets_.end(), [k](const EdgeSet& s) { return s.size() == k; }));
}

namespace {

/// Vertex-at-a-time injective map search; `visit` returns false to stop early.
template <typename Visit>
void for_each_embedding(const Hypergraph& host, const Hypergraph& pattern, Visit&& visit) {
  if (host.uniformity() != pattern.uniformity()) return;
  const std::size_t h = pattern.num_vertices();
  if (h > host.num_vertices()) return;

  // BFS-style vertex order so most vertices have an already mapped neighbor.
  std::vector<Vertex> order;
  std::vector<char> seen(h, 0);
  for (Vertex start = 0; start < h; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    std::size_t head = order.size();
    order.push_back(start);
    while (head < order.size()) {
      const Vertex v = order[head++];
      for (EdgeIndex e : pattern.incident(v)) {
        for (Vertex u : pattern.edge(e)) {
          if (!seen[u]) {
            seen[u] = 1;
            order.push_back(u);
          }
        }
      }
    }
  }
  std::vector<std::size_t> position(h);
  for (std::size_t i = 0; i < h; ++i) position[order[i]] = i;

  // Edges whose last vertex in the order is order[i] get checked when it is placed.
  std::vector<std::vector<EdgeIndex>> closing(h);
  std::vector<Vertex> anchor_neighbor(h, kUnmapped);
  for (EdgeIndex e = 0; e < pattern.num_edges(); ++e) {
    std::size_t last = 0;
    for (Vertex v : pattern.edge(e)) last = std::max(last, position[v]);
    closing[last].push_back(e);
    for (Vertex v : pattern.edge(e)) {
      if (position[v] == last) continue;
      if (anchor_neighbor[last] == kUnmapped || position[v] < position[anchor_neighbor[last]]) {
        anchor_neighbor[last] = v;
      }
    }
  }

  std::vector<Vertex> image(h, kUnmapped);
  std::vector<char> used(host.num_vertices(), 0);
  std::vector<std::uint32_t> stamp(host.num_vertices(), 0);
  std::uint32_t stamp_clock = 0;
  bool stop = false;
  Edge scratch(pattern.uniformity());

  const auto fits = [&](std::size_t i, Vertex x) {
    if (used[x] || host.degree(x) < pattern.degree(order[i])) return false;
    image[order[i]] = x;
    for (EdgeIndex e : closing[i]) {
      const auto pe = pattern.edge(e);
      for (std::size_t j = 0; j < pe.size(); ++j) scratch[j] = image[pe[j]];
      std::sort(scratch.begin(), scratch.end());
      if (!host.has_edge(scratch)) {
        image[order[i]] = kUnmapped;
        return false;
      }
    }
    return true;
  };

  const auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == h) {
      if (!visit(static_cast<const std::vector<Vertex>&>(image))) stop = true;
      return;
    }
    const auto place = [&](Vertex x) {
      if (!fits(i, x)) return;
      used[x] = 1;
      self(self, i + 1);
      used[x] = 0;
      image[order[i]] = kUnmapped;
    };
    if (anchor_neighbor[i] != kUnmapped) {
      const Vertex y = image[anchor_neighbor[i]];
      const std::uint32_t mark = ++stamp_clock;
      std::vector<Vertex> candidates;
      for (EdgeIndex e : host.incident(y)) {
        for (Vertex x : host.edge(e)) {
          if (stamp[x] != mark) {
            stamp[x] = mark;
            candidates.push_back(x);
          }
        }
      }
      std::sort(candidates.begin(), candidates.end());
      for (Vertex x : candidates) {
        place(x);
        if (stop) return;
      }
    } else {
      for (Vertex x = 0; x < host.num_vertices(); ++x) {
        place(x);
        if (stop) return;
      }
    }
  };
  recurse(recurse, 0);
}

}  // namespace

/// One pattern edge per orbit of Aut(H) on edges. Every copy has an embedding sending
/// any chosen edge of an orbit onto its smallest host edge, so anchoring at orbit
/// representatives loses nothing. Falls back to all edges when Aut(H) is very large.
std::vector<EdgeIndex> anchor_edge_representatives(const Hypergraph& pattern) {
  constexpr std::uint64_t kMaxAutomorphisms = 100000;
  const std::size_t ell = pattern.num_edges();
  std::vector<EdgeIndex> parent(ell);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](EdgeIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::uint64_t seen = 0;
  bool complete = true;
  Edge image(pattern.uniformity());
  for_each_embedding(pattern, pattern, [&](const std::vector<Vertex>& sigma) {
    if (++seen > kMaxAutomorphisms) {
      complete = false;
      return false;
    }
    for (EdgeIndex q = 0; q < ell; ++q) {
      const auto e = pattern.edge(q);
      for (std::size_t i = 0; i < e.size(); ++i) image[i] = sigma[e[i]];
      std::sort(image.begin(), image.end());
      const EdgeIndex a = find(q);
      const EdgeIndex b = find(*pattern.find_edge(image));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    return true;
  });
  std::vector<EdgeIndex> reps;
  for (EdgeIndex q = 0; q < ell; ++q) {
    if (!complete || find(q) == q) reps.push_back(q);
  }
  return reps;
}

/// Backtracking over an edge ordering of the pattern, anchored at one host edge.
///
/// For anchor host edge a, finds every copy whose smallest edge index is a: some
/// pattern edge maps onto a and every other pattern edge maps to a host edge with a
/// larger index. The pattern edges are ordered so each next edge shares as many
/// vertices as possible with the already placed ones.
class AnchoredSearch {
 public:
  AnchoredSearch(const Hypergraph& host, const Pattern& pattern)
      : host_(host),
        pattern_(pattern.graph()),
        r_(pattern.r()),
        vmap_(pattern.h(), kUnmapped),
        inverse_(host.num_vertices(), kUnmapped),
        in_partial_(host.num_edges(), 0) {
    check_uniformity(host, pattern);
    if (r_ > kMaxUniformity) throw std::invalid_argument("uniformity above 16 is not supported");
    const std::size_t ell = pattern_.num_edges();
    for (EdgeIndex a : anchor_edge_representatives(pattern_)) {
      std::vector<EdgeIndex> order{a};
      std::vector<char> covered(pattern_.num_vertices(), 0);
      std::vector<char> placed(ell, 0);
      placed[a] = 1;
      for (Vertex v : pattern_.edge(a)) covered[v] = 1;
      while (order.size() < ell) {
        int best_overlap = -1;
        EdgeIndex best = 0;
        for (EdgeIndex q = 0; q < ell; ++q) {
          if (placed[q]) continue;
          int overlap = 0;
          for (Vertex v : pattern_.edge(q)) overlap += covered[v];
          if (overlap > best_overlap) {
            best_overlap = overlap;
            best = q;
          }
        }
        placed[best] = 1;
        order.push_back(best);
        for (Vertex v : pattern_.edge(best)) covered[v] = 1;
      }
      orders_.push_back(std::move(order));
    }
  }

  /// Appends to `out` every copy with smallest edge `anchor` (duplicates removed, sorted).
  void run(EdgeIndex anchor, const ForbiddenIndex* forbidden, std::vector<Copy>& out) {
    anchor_ = anchor;
    forbidden_ = forbidden;
    found_.clear();
    in_partial_[anchor] = 1;
    if (!(forbidden_ && forbidden_->completed_by(anchor, in_partial_))) {
      chosen_.assign(1, anchor);
      for (const auto& order : orders_) {
        order_ = &order;
        place_edge(0, anchor);
      }
    }
    in_partial_[anchor] = 0;
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    for (auto& c : found_) out.push_back(std::move(c));
  }

 private:
  // Maps pattern edge (*order_)[depth] onto host edge f in every consistent way.
  void place_edge(std::size_t depth, EdgeIndex f) {
    const auto q = pattern_.edge((*order_)[depth]);
    std::array<Vertex, kMaxUniformity> unmapped;
    std::array<Vertex, kMaxUniformity> free_host;
    std::size_t n_unmapped = 0, n_free = 0, mapped_count = 0, matched = 0;
    for (Vertex pv : q) {
      if (vmap_[pv] == kUnmapped) {
        unmapped[n_unmapped++] = pv;
      } else {
        ++mapped_count;
      }
    }
    for (Vertex x : host_.edge(f)) {
      if (inverse_[x] == kUnmapped) {
        free_host[n_free++] = x;
      } else if (std::find(q.begin(), q.end(), inverse_[x]) != q.end()) {
        ++matched;
      } else {
        return;  // x already hosts a pattern vertex outside this edge
      }
    }
    if (matched != mapped_count || n_free != n_unmapped) return;

    // free_host is sorted (edges are sorted), so next_permutation visits every bijection.
    do {
      bool ok = true;
      for (std::size_t i = 0; i < n_unmapped; ++i) {
        if (host_.degree(free_host[i]) < pattern_.degree(unmapped[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < n_unmapped; ++i) {
        vmap_[unmapped[i]] = free_host[i];
        inverse_[free_host[i]] = unmapped[i];
      }
      extend(depth + 1);
      for (std::size_t i = 0; i < n_unmapped; ++i) {
        vmap_[unmapped[i]] = kUnmapped;
        inverse_[free_host[i]] = kUnmapped;
      }
    } while (std::next_permutation(free_host.begin(), free_host.begin() + n_free));
  }

  void extend(std::size_t depth) {
    if (depth == order_->size()) {
      record();
      return;
    }
    const auto q = pattern_.edge((*order_)[depth]);
    // Candidates come from the incidence list of the least-degree mapped host vertex.
    Vertex pivot = kUnmapped;
    for (Vertex pv : q) {
      if (vmap_[pv] != kUnmapped &&
          (pivot == kUnmapped || host_.degree(vmap_[pv]) < host_.degree(pivot))) {
        pivot = vmap_[pv];
      }
    }
    const auto try_edge = [&](EdgeIndex f) {
      if (f <= anchor_ || in_partial_[f]) return;
      in_partial_[f] = 1;
      if (!(forbidden_ && forbidden_->completed_by(f, in_partial_))) {
        chosen_.push_back(f);
        place_edge(depth, f);
        chosen_.pop_back();
      }
      in_partial_[f] = 0;
    };
    if (pivot != kUnmapped) {
      const auto inc = host_.incident(pivot);
      // Incidence lists are increasing; skip straight past the anchor.
      for (auto it = std::upper_bound(inc.begin(), inc.end(), anchor_); it != inc.end(); ++it) {
        try_edge(*it);
      }
    } else {
      for (EdgeIndex f = anchor_ + 1; f < host_.num_edges(); ++f) try_edge(f);
    }
  }

  void record() {
    Copy c;
    c.edges = chosen_;
    std::sort(c.edges.begin(), c.edges.end());
    c.vertices.assign(vmap_.begin(), vmap_.end());
    std::sort(c.vertices.begin(), c.vertices.end());
    found_.push_back(std::move(c));
  }

  const Hypergraph& host_;
  const Hypergraph& pattern_;
  std::size_t r_;
  std::vector<std::vector<EdgeIndex>> orders_;
  const std::vector<EdgeIndex>* order_ = nullptr;
  std::vector<Vertex> vmap_;
  std::vector<Vertex> inverse_;
  std::vector<char> in_partial_;
  std::vector<EdgeIndex> chosen_;
  EdgeIndex anchor_ = 0;
  const ForbiddenIndex* forbidden_ = nullptr;
  std::vector<Copy> found_;
};

CopyEnumerator::CopyEnumerator(const Hypergraph& host, const Pattern& pattern,
                               const ForbiddenIndex* forbidden)
    : host_(host), forbidden_(forbidden), search_(std::make_unique<AnchoredSearch>(host, pattern)) {}

CopyEnumerator::~CopyEnumerator() = default;

std::optional<Copy> CopyEnumerator::next() {
  while (true) {
    while (batch_pos_ < batch_.size()) {
      Copy& c = batch_[batch_pos_++];
      if (forbidden_ && forbidden_->any_subset_of(c.edges)) continue;
      return std::move(c);
    }
    if (next_anchor_ >= host_.num_edges()) return std::nullopt;
    batch_.clear();
    batch_pos_ = 0;
    search_->run(next_anchor_++, forbidden_, batch_);
  }
}

std::vector<Copy> enumerate_copies(const Hypergraph& host, const Pattern& pattern,
                                   std::optional<std::size_t> limit,
                                   std::span<const EdgeSet> forbidden) {
  check_uniformity(host, pattern);
  std::optional<ForbiddenIndex> index;
  if (!forbidden.empty()) {
    index.emplace(host.num_edges());
    for (const auto& s : forbidden) index->insert(s);
  }
  CopyEnumerator it(host, pattern, index ? &*index : nullptr);
  std::vector<Copy> out;
  while (!limit || out.size() < *limit) {
    auto c = it.next();
    if (!c) break;
    out.push_back(std::move(*c));
  }
  return out;
}

std::uint64_t count_copies(const Hypergraph& host, const Pattern& pattern, unsigned workers) {
  check_uniformity(host, pattern);
  workers = std::max(1U, workers);
  std::atomic<std::uint64_t> total{0};
  const auto work = [&](unsigned id) {
    AnchoredSearch search(host, pattern);
    std::vector<Copy> batch;
    std::uint64_t local = 0;
    for (EdgeIndex a = id; a < host.num_edges(); a += workers) {
      batch.clear();
      search.run(a, nullptr, batch);
      local += batch.size();
    }
    total += local;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id);
  }
  return total.load();
}


std::uint64_t embedding_count(const Hypergraph& host, const Hypergraph& pattern) {
  std::uint64_t count = 0;
  for_each_embedding(host, pattern, [&](const std::vector<Vertex>&) {
    ++count;
    return true;
  });
  return count;
}

bool has_embedding(const Hypergraph& host, const Hypergraph& pattern) {
  bool found = false;
  for_each_embedding(host, pattern, [&](const std::vector<Vertex>&) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t automorphism_count(const Hypergraph& pattern) { return embedding_count(pattern, pattern); }

bool is_copy_of(const Hypergraph& host, const Pattern& pattern, const EdgeSet& edges) {
  if (host.uniformity() != pattern.r()) return false;
  if (edges.size() != pattern.ell() || !is_valid_edge_set(edges, host.num_edges())) return false;
  std::vector<Vertex> spanned;
  const Hypergraph sub = edge_subgraph(host, edges, &spanned);
  if (spanned.size() != pattern.h()) return false;
  // Equal vertex and edge counts: an embedding is an isomorphism.
  return has_embedding(sub, pattern.graph());
}

}  // namespace balsat
