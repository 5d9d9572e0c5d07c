#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "balsat/hitting_set.hpp"
#include "balsat/hypergraph.hpp"
#include "balsat/metrics.hpp"
#include "balsat/pattern.hpp"
#include "balsat/rational.hpp"

namespace balsat {

enum class ExMethod { Exhaustive, BranchAndBound };
const char* to_string(ExMethod m);

struct ExtremalRecord {
  std::size_t n = 0;
  std::string pattern_id;
  std::uint64_t ex_value = 0;
  Hypergraph witness;  // H-free, exactly ex_value edges
  ExMethod method = ExMethod::Exhaustive;
  std::uint64_t nodes = 0;
};

struct ExBudget {
  std::uint64_t max_nodes = 200'000'000;
  std::size_t canonical_leaf_cap = 20000;
};

/// ex(n, H) for a graph pattern. Labeled edge-by-edge search when C(n,2) <= 28;
/// above that, vertex-by-vertex augmentation of H-free graphs up to isomorphism,
/// keeping at level k only graphs with at least L_k edges, where L_n = ex(n-1, H) + 1
/// and L_{k-1} = L_k - floor(2 L_k / k) (deleting a minimum-degree vertex), and only
/// extensions whose new vertex has minimum degree. Throws BudgetExceeded rather than
/// return an unproven value.
ExtremalRecord ex_exact(std::size_t n, const Pattern& pattern, const ExBudget& budget = {});

enum class SubgraphMode { Exact, Greedy };
const char* to_string(SubgraphMode m);

struct SubgraphOptions {
  std::uint64_t copy_budget = 5000;        // exact mode refuses above this many copies
  std::uint64_t node_budget = 20'000'000;  // hitting-set search nodes
  bool complete_host_shortcut = true;      // K_n hosts: ex(K_n, H) = ex(n, H)
  ExBudget ex_budget{};
};

struct HFreeResult {
  std::uint64_t value = 0;  // edges of the H-free subgraph
  SubgraphMode kind = SubgraphMode::Exact;
  EdgeSet removed;          // host edges deleted
  std::uint64_t copies = 0;
};

/// Largest H-free edge subset of G: e(G) minus a minimum (exact) or greedy hitting set
/// of the copy hypergraph. Exact mode throws BudgetExceeded when over budget.
HFreeResult ex_random_subgraph(const Hypergraph& g, const Pattern& pattern, SubgraphMode mode,
                               const SubgraphOptions& options = {});

/// max(0, e(G) - ex(n, H)): every graph has at least this many copies.
inline std::uint64_t deletion_lower_bound(std::uint64_t e_g, std::uint64_t ex_value) {
  return e_g > ex_value ? e_g - ex_value : 0;
}

struct SubsetExperimentReport {
  std::size_t n = 0;
  std::size_t w = 0;
  double p = 0;                  // w / n
  double p_min = 0;              // (8A/k)^(1/(r-alpha)); 0 when w was given explicitly
  double k = 0;
  std::size_t trials = 0;
  std::vector<std::uint64_t> induced_edges;   // e(G[W]) per trial
  std::vector<std::uint64_t> induced_copies;  // copies of H in G[W] per trial
  double good_fraction = 0;      // share of trials with e(G[W]) >= e(G) p^r / 4
  double mean_edges = 0;
  double stderr_edges = 0;
  double expected_edges = 0;     // e(G) C(n-r, w-r) / C(n, w)
  double expected_lower = 0;     // e(G) p^r / 2 (valid when w >= r^2)
  double mean_copies = 0;
  std::uint64_t host_copies = 0;
  double empirical_c_h = 0;      // host_copies / (k^((h-alpha)/(r-alpha)) n^alpha)
  bool admissible_A = false;     // A >= r^(2r)
  bool admissible_k = false;     // k >= 2^(3r) A
};

/// Random vertex-subset experiment. When `w` is not given it is chosen as
/// ceil(n * p_min), requiring p_min <= w/n <= 2 p_min and w/n < 1; refusals name
/// the violated inequality (std::invalid_argument).
SubsetExperimentReport random_subset_experiment(const Hypergraph& g, const Pattern& pattern,
                                                const Rational& alpha, double A, std::size_t trials,
                                                std::uint64_t seed,
                                                std::optional<std::size_t> w = std::nullopt);

struct EsGoodReport {
  std::uint64_t copies = 0;
  double normalizer = 0;  // e(G)^l / n^(2l - h)
  double ratio = 0;       // copies / normalizer (0 for an empty host)
};

EsGoodReport es_good_check(const Hypergraph& g, const Pattern& pattern);

struct ExperimentRecord {
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 0;  // cell seed used to sample G(n, p)
  std::size_t trial = 0;
  std::optional<std::uint64_t> measured;  // empty when the cell was refused
  SubgraphMode measured_kind = SubgraphMode::Exact;
  double bound_value = 0;
  BoundBranch branch = BoundBranch::High;
  double runtime_ms = 0;
  std::uint64_t host_edges = 0;
  std::string refusal;
};

struct SweepOptions {
  std::vector<std::size_t> n_values;
  std::vector<double> p_values;
  std::size_t trials = 1;
  SubgraphMode mode = SubgraphMode::Exact;
  std::uint64_t seed = 1;
  BoundVariant variant = BoundVariant::General;
  double bound_constant = 1.0;
  unsigned workers = 1;
  SubgraphOptions subgraph{};
};

/// One record per (n, p, trial) cell in that order; cell i samples G(n, p) with
/// derive_seed(seed, i), so results do not depend on the worker count.
std::vector<ExperimentRecord> random_turan_sweep(const Pattern& pattern, const Rational& alpha,
                                                 const SweepOptions& options);

/// CSV with columns n,p,seed,trial,measured,measured_kind,bound_value,branch,runtime_ms,
/// preceded by "# " comment lines.
void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
                     const std::vector<std::string>& header_comments = {});

}  // namespace balsat
