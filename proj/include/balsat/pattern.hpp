#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balsat/hypergraph.hpp"

namespace balsat {

/// Assignment of every vertex to one of r parts such that each edge meets every part once.
using PartiteWitness = std::vector<std::uint32_t>;

/// Exact backtracking decision; returns a witness partition when one exists.
std::optional<PartiteWitness> find_r_partition(const Hypergraph& g);

inline bool is_r_partite(const Hypergraph& g) { return find_r_partition(g).has_value(); }

/// The forbidden r-graph H: at least two edges and no isolated vertices.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(Hypergraph graph, std::string name = {});

  const Hypergraph& graph() const { return graph_; }
  const std::string& name() const { return name_; }
  std::size_t h() const { return graph_.num_vertices(); }
  std::size_t ell() const { return graph_.num_edges(); }
  std::size_t r() const { return graph_.uniformity(); }

  bool r_partite() const { return partition_.has_value(); }
  const std::optional<PartiteWitness>& partition() const { return partition_; }

 private:
  Hypergraph graph_;
  std::string name_;
  std::optional<PartiteWitness> partition_;
};

/// Builtin descriptors: "cycle:L", "path:V", "complete:N", "complete_bipartite:A:B",
/// "cube", "complete_uniform:N:R". An optional "builtin:" prefix is accepted.
Pattern builtin_pattern(std::string_view descriptor);

/// "builtin:..." or a path to an edge-list file.
Pattern load_pattern(std::string_view spec);

}  // namespace balsat
