#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "balsat/hypergraph.hpp"
#include "balsat/pattern.hpp"

namespace balsat {

/// A copy of the pattern in the host, identified by its edge set.
struct Copy {
  EdgeSet edges;                 // sorted, size e(H)
  std::vector<Vertex> vertices;  // sorted host vertices spanned, size v(H)

  friend bool operator==(const Copy& a, const Copy& b) { return a.edges == b.edges; }
  friend bool operator<(const Copy& a, const Copy& b) { return a.edges < b.edges; }
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept;
};

/// Registry of edge sets that a copy must not contain.
///
/// Sets are indexed by every edge they contain so that containment checks touch
/// only the sets through the edges at hand, not the whole registry.
class ForbiddenIndex {
 public:
  explicit ForbiddenIndex(std::size_t num_host_edges);

  /// Returns false if the set was already present. Indices must be < num_host_edges.
  bool insert(EdgeSet set);
  bool contains(const EdgeSet& set) const { return lookup_.contains(set); }

  /// True if some stored set contains `added` and all of its edges are flagged in `in_partial`.
  bool completed_by(EdgeIndex added, const std::vector<char>& in_partial) const;
  /// True if some stored set is a subset of the sorted set `edges`.
  bool any_subset_of(const EdgeSet& edges) const;

  std::size_t size() const { return sets_.size(); }
  std::size_t count_of_size(std::size_t k) const;
  const std::vector<EdgeSet>& sets() const { return sets_; }

 private:
  std::size_t num_host_edges_;
  bool has_empty_ = false;
  std::vector<EdgeSet> sets_;
  std::unordered_set<EdgeSet, EdgeSetHash> lookup_;
  std::vector<std::vector<std::uint32_t>> by_edge_;
};

class AnchoredSearch;

/// Streams the copies of `pattern` in `host` in lexicographic order of their sorted
/// edge-index sets, each exactly once.
///
/// Copies are produced in batches grouped by their smallest edge index. The forbidden
/// registry (optional, not owned) is consulted when a batch is generated; it may grow
/// between calls to next(), in which case copies from an already generated batch are
/// filtered against the grown registry before being returned.
class CopyEnumerator {
 public:
  CopyEnumerator(const Hypergraph& host, const Pattern& pattern,
                 const ForbiddenIndex* forbidden = nullptr);
  ~CopyEnumerator();
  CopyEnumerator(const CopyEnumerator&) = delete;
  CopyEnumerator& operator=(const CopyEnumerator&) = delete;

  std::optional<Copy> next();

 private:
  const Hypergraph& host_;
  const ForbiddenIndex* forbidden_;
  std::unique_ptr<AnchoredSearch> search_;
  EdgeIndex next_anchor_ = 0;
  std::vector<Copy> batch_;
  std::size_t batch_pos_ = 0;
};

/// Throws std::invalid_argument on uniformity mismatch.
std::vector<Copy> enumerate_copies(const Hypergraph& host, const Pattern& pattern,
                                   std::optional<std::size_t> limit = std::nullopt,
                                   std::span<const EdgeSet> forbidden = {});

/// Exact number of copies; `workers` > 1 splits the anchor edges across threads.
std::uint64_t count_copies(const Hypergraph& host, const Pattern& pattern, unsigned workers = 1);

/// Number of injective homomorphisms pattern -> host (vertex-by-vertex backtracking,
/// independent of the copy enumerator).
std::uint64_t embedding_count(const Hypergraph& host, const Hypergraph& pattern);

bool has_embedding(const Hypergraph& host, const Hypergraph& pattern);

/// |Aut(H)| as embedding_count(H, H).
std::uint64_t automorphism_count(const Hypergraph& pattern);

/// True if `edges` is a valid edge set of `host` whose subgraph is isomorphic to the pattern.
bool is_copy_of(const Hypergraph& host, const Pattern& pattern, const EdgeSet& edges);

}  // namespace balsat
