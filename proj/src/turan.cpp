#include "balsat/turan.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <thread>

#include "balsat/binomial.hpp"
#include "balsat/enumerate.hpp"
#include "balsat/rng.hpp"
#include "balsat/small_graph.hpp"

namespace balsat {

using small::BitGraph;
using small::PatternMatcher;
using small::Row;

const char* to_string(ExMethod m) {
  return m == ExMethod::Exhaustive ? "exhaustive" : "branch_and_bound";
}

const char* to_string(SubgraphMode m) { return m == SubgraphMode::Exact ? "exact" : "greedy_lower_bound"; }

namespace {

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("ex_exact exceeded its budget of " + std::to_string(budget_) +
                           " search nodes; refusing to report an inexact value");
    }
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

// Every labeled graph on n vertices, edge by edge, pruned when an edge closes a copy
// or when the remaining edges cannot beat the incumbent.
class LabeledSearch {
 public:
  LabeledSearch(std::size_t n, const PatternMatcher& matcher, NodeCounter& counter)
      : matcher_(matcher), counter_(counter), graph_(n), witness_(n) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) pairs_.push_back({u, v});
    }
  }

  std::pair<std::uint64_t, BitGraph> run() {
    dfs(0, 0);
    return {static_cast<std::uint64_t>(best_), witness_};
  }

 private:
  void dfs(std::size_t idx, std::size_t current) {
    counter_.tick();
    if (static_cast<long long>(current + pairs_.size() - idx) <= best_) return;
    if (idx == pairs_.size()) {
      best_ = static_cast<long long>(current);
      witness_ = graph_;
      return;
    }
    const auto [u, v] = pairs_[idx];
    graph_.add(u, v);
    if (!matcher_.contains_through_edge(graph_, u, v)) dfs(idx + 1, current + 1);
    graph_.remove(u, v);
    dfs(idx + 1, current);
  }

  const PatternMatcher& matcher_;
  NodeCounter& counter_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  BitGraph graph_;
  BitGraph witness_;
  long long best_ = -1;
};

// Extends every kept graph on k-1 vertices by one vertex in all H-free ways.
class Augmenter {
 public:
  Augmenter(const PatternMatcher& matcher, NodeCounter& counter, const ExBudget& budget)
      : matcher_(matcher), counter_(counter), budget_(budget) {}

  std::vector<BitGraph> level(const std::vector<BitGraph>& previous, std::size_t k, long long min_edges) {
    std::map<std::vector<Row>, BitGraph> canonical;
    std::vector<BitGraph> unresolved;  // canonical form gave up; kept without dedup
    for (const BitGraph& g : previous) {
      BitGraph h = g;
      h.n = k;
      const long long need = min_edges - static_cast<long long>(g.edge_count());
      extend_vertex(g, h, 0, 0, SIZE_MAX, need, [&](const BitGraph& candidate) {
        counter_.tick();
        if (auto form = small::canonical_form(candidate, budget_.canonical_leaf_cap)) {
          canonical.emplace(std::move(*form), candidate);
        } else {
          unresolved.push_back(candidate);
        }
      });
    }
    std::vector<BitGraph> out;
    out.reserve(canonical.size() + unresolved.size());
    for (auto& [form, g] : canonical) out.push_back(g);
    for (auto& g : unresolved) out.push_back(g);
    return out;
  }

 private:
  // Chooses the neighbourhood of the new vertex x = h.n - 1 among old vertices >= y.
  template <typename Emit>
  void extend_vertex(const BitGraph& old, BitGraph& h, std::size_t y, std::size_t degree,
                     std::size_t min_excluded_degree, long long need, Emit&& emit) {
    counter_.tick();
    const std::size_t x = h.n - 1;
    if (degree > min_excluded_degree) return;  // x must be a minimum-degree vertex
    if (static_cast<long long>(degree + (x - y)) < need) return;
    if (y == x) {
      for (std::size_t v = 0; v < x; ++v) {
        if (h.has(x, v) && degree > old.degree(v) + 1) return;
      }
      emit(static_cast<const BitGraph&>(h));
      return;
    }
    h.add(x, y);
    if (!matcher_.contains_through_edge(h, x, y)) {
      extend_vertex(old, h, y + 1, degree + 1, min_excluded_degree, need, emit);
    }
    h.remove(x, y);
    extend_vertex(old, h, y + 1, degree, std::min(min_excluded_degree, old.degree(y)), need, emit);
  }

  const PatternMatcher& matcher_;
  NodeCounter& counter_;
  const ExBudget& budget_;
};

ExtremalRecord ex_exact_impl(std::size_t n, const Pattern& pattern, const PatternMatcher& matcher,
                             NodeCounter& counter, const ExBudget& budget) {
  ExtremalRecord rec;
  rec.n = n;
  rec.pattern_id = pattern.name();
  if (n < pattern.h()) {
    // No copy fits; H has no isolated vertices.
    rec.witness = n >= 2 ? complete_graph(n) : Hypergraph(n, 2, {});
    rec.ex_value = rec.witness.num_edges();
    rec.method = ExMethod::Exhaustive;
    return rec;
  }
  if (n * (n - 1) / 2 <= 28) {
    LabeledSearch search(n, matcher, counter);
    auto [value, witness] = search.run();
    rec.ex_value = value;
    rec.witness = witness.to_hypergraph();
    rec.method = ExMethod::Exhaustive;
    return rec;
  }

  const ExtremalRecord prev = ex_exact_impl(n - 1, pattern, matcher, counter, budget);
  rec.method = ExMethod::BranchAndBound;
  std::vector<long long> min_edges(n + 1, 0);
  min_edges[n] = static_cast<long long>(prev.ex_value) + 1;
  for (std::size_t k = n; k >= 2; --k) {
    min_edges[k - 1] = min_edges[k] - (2 * min_edges[k]) / static_cast<long long>(k);
  }
  Augmenter augmenter(matcher, counter, budget);
  std::vector<BitGraph> level{BitGraph(1)};
  for (std::size_t k = 2; k <= n && !level.empty(); ++k) {
    level = augmenter.level(level, k, min_edges[k]);
  }
  if (level.empty()) {
    // No H-free graph beats ex(n-1): add an isolated vertex to that witness.
    rec.ex_value = prev.ex_value;
    rec.witness = Hypergraph(n, 2, prev.witness.edges());
    return rec;
  }
  const BitGraph* best = &level.front();
  for (const auto& g : level) {
    if (g.edge_count() > best->edge_count()) best = &g;
  }
  rec.ex_value = best->edge_count();
  rec.witness = best->to_hypergraph();
  return rec;
}

}  // namespace

ExtremalRecord ex_exact(std::size_t n, const Pattern& pattern, const ExBudget& budget) {
  if (pattern.r() != 2) throw std::invalid_argument("ex_exact supports graph patterns (r = 2)");
  if (n > small::kMaxVertices || pattern.h() > small::kMaxVertices) {
    throw std::invalid_argument("ex_exact supports at most 64 vertices");
  }
  const PatternMatcher matcher(pattern.graph());
  NodeCounter counter(budget.max_nodes);
  ExtremalRecord rec = ex_exact_impl(n, pattern, matcher, counter, budget);
  rec.nodes = counter.nodes();
  return rec;
}

HFreeResult ex_random_subgraph(const Hypergraph& g, const Pattern& pattern, SubgraphMode mode,
                               const SubgraphOptions& options) {
  HFreeResult out;
  out.kind = mode;
  const std::size_t n = g.num_vertices();
  const bool complete = g.uniformity() == 2 && n >= 2 && g.num_edges() == n * (n - 1) / 2;
  if (mode == SubgraphMode::Exact && options.complete_host_shortcut && complete && pattern.r() == 2) {
    const ExtremalRecord rec = ex_exact(n, pattern, options.ex_budget);
    out.value = rec.ex_value;
    out.copies = count_copies(g, pattern);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      if (!rec.witness.has_edge(g.edge(e))) out.removed.push_back(e);
    }
    return out;
  }

  std::optional<std::size_t> limit;
  if (mode == SubgraphMode::Exact) limit = options.copy_budget + 1;
  const auto copies = enumerate_copies(g, pattern, limit);
  if (mode == SubgraphMode::Exact && copies.size() > options.copy_budget) {
    throw BudgetExceeded("exact mode refuses: more than " + std::to_string(options.copy_budget) +
                         " copies in the host");
  }
  out.copies = copies.size();
  std::vector<ElementSet> sets;
  sets.reserve(copies.size());
  for (const auto& c : copies) sets.push_back(c.edges);
  if (mode == SubgraphMode::Exact) {
    out.removed = minimum_hitting_set(g.num_edges(), sets, options.node_budget).chosen;
  } else {
    out.removed = greedy_hitting_set(g.num_edges(), sets);
  }
  out.value = g.num_edges() - out.removed.size();
  return out;
}

SubsetExperimentReport random_subset_experiment(const Hypergraph& g, const Pattern& pattern,
                                                const Rational& alpha, double A, std::size_t trials,
                                                std::uint64_t seed, std::optional<std::size_t> w) {
  if (g.uniformity() != pattern.r()) throw std::invalid_argument("uniformity mismatch");
  SubsetExperimentReport rep;
  const std::size_t n = g.num_vertices();
  const std::size_t r = g.uniformity();
  const double a = to_double(alpha);
  const double e_g = static_cast<double>(g.num_edges());
  if (!(static_cast<double>(r) - a > 0)) throw std::invalid_argument("alpha must be smaller than r");
  if (n == 0) throw std::invalid_argument("empty host");
  rep.n = n;
  rep.k = e_g / std::pow(static_cast<double>(n), a);
  rep.trials = trials;
  rep.admissible_A = A >= std::pow(static_cast<double>(r), 2.0 * static_cast<double>(r));
  rep.admissible_k = rep.k >= std::pow(2.0, 3.0 * static_cast<double>(r)) * A;
  if (trials == 0) return rep;

  if (w) {
    if (*w > n) throw std::invalid_argument("w exceeds n");
    rep.w = *w;
  } else {
    if (!(A > 0) || !(rep.k > 0)) throw std::invalid_argument("need A > 0 and a nonempty host");
    rep.p_min = std::pow(8.0 * A / rep.k, 1.0 / (static_cast<double>(r) - a));
    if (rep.p_min >= 1.0) {
      throw std::invalid_argument("k too small: (8A/k)^(1/(r-alpha)) = " + std::to_string(rep.p_min) +
                                  " >= 1, so p < 1 fails (needs k > 8A)");
    }
    const double target = static_cast<double>(n) * rep.p_min;
    const auto chosen = static_cast<std::size_t>(std::ceil(target));
    if (static_cast<double>(chosen) > 2.0 * target) {
      throw std::invalid_argument("no integer w with n*p_min <= w <= 2*n*p_min (n*p_min = " +
                                  std::to_string(target) + ")");
    }
    if (chosen >= n) throw std::invalid_argument("w/n must be < 1");
    rep.w = chosen;
  }
  rep.p = static_cast<double>(rep.w) / static_cast<double>(n);

  double good = 0, sum = 0, sum_sq = 0, copies_sum = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto subset = uniform_vertex_subset(n, rep.w, derive_seed(seed, t));
    const Hypergraph sub = induced_subgraph(g, subset);
    const auto edges = static_cast<std::uint64_t>(sub.num_edges());
    const std::uint64_t copies = edges >= pattern.ell() ? count_copies(sub, pattern) : 0;
    rep.induced_edges.push_back(edges);
    rep.induced_copies.push_back(copies);
    const double x = static_cast<double>(edges);
    sum += x;
    sum_sq += x * x;
    copies_sum += static_cast<double>(copies);
    if (x >= 0.25 * e_g * std::pow(rep.p, static_cast<double>(r))) good += 1;
  }
  const double t = static_cast<double>(trials);
  rep.good_fraction = good / t;
  rep.mean_edges = sum / t;
  rep.mean_copies = copies_sum / t;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - t * rep.mean_edges * rep.mean_edges) / (t - 1));
    rep.stderr_edges = std::sqrt(var / t);
  }
  if (rep.w >= r) {
    rep.expected_edges =
        e_g * to_double(Rational(binomial(n - r, rep.w - r), binomial(n, rep.w)));
  }
  rep.expected_lower = 0.5 * e_g * std::pow(rep.p, static_cast<double>(r));
  rep.host_copies = count_copies(g, pattern);
  const double h = static_cast<double>(pattern.h());
  const double scale = std::pow(rep.k, (h - a) / (static_cast<double>(r) - a)) *
                       std::pow(static_cast<double>(n), a);
  rep.empirical_c_h = scale > 0 ? static_cast<double>(rep.host_copies) / scale : 0;
  return rep;
}

EsGoodReport es_good_check(const Hypergraph& g, const Pattern& pattern) {
  if (pattern.r() != 2 || g.uniformity() != 2) throw std::invalid_argument("es_good_check needs graphs");
  EsGoodReport rep;
  if (g.num_edges() == 0) return rep;
  rep.copies = count_copies(g, pattern);
  const double ell = static_cast<double>(pattern.ell());
  const double h = static_cast<double>(pattern.h());
  rep.normalizer = std::pow(static_cast<double>(g.num_edges()), ell) /
                   std::pow(static_cast<double>(g.num_vertices()), 2 * ell - h);
  rep.ratio = static_cast<double>(rep.copies) / rep.normalizer;
  return rep;
}

std::vector<ExperimentRecord> random_turan_sweep(const Pattern& pattern, const Rational& alpha,
                                                 const SweepOptions& options) {
  if (options.trials == 0) throw std::invalid_argument("trials must be positive");
  for (std::size_t n : options.n_values) {
    if (n < 2 || n > 4096) throw std::invalid_argument("sweep n must lie in [2, 4096]");
  }
  for (double p : options.p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sweep p must lie in [0, 1]");
  }
  const BoundShape shape = bound_shape(compute_densities(pattern), pattern, alpha, options.variant);
  const std::size_t per_n = options.p_values.size() * options.trials;
  const std::size_t cells = options.n_values.size() * per_n;
  std::vector<ExperimentRecord> records(cells);

  const auto run_cell = [&](std::size_t index) {
    ExperimentRecord& rec = records[index];
    rec.n = options.n_values[index / per_n];
    rec.p = options.p_values[(index % per_n) / options.trials];
    rec.trial = index % options.trials;
    rec.seed = derive_seed(options.seed, index);
    rec.measured_kind = options.mode;
    const BoundValue bound = evaluate_bound(shape, static_cast<double>(rec.n), rec.p, options.bound_constant);
    rec.bound_value = bound.value;
    rec.branch = bound.branch;
    const auto start = std::chrono::steady_clock::now();
    const Hypergraph sample = gnp_sample(rec.n, rec.p, 2, rec.seed);
    rec.host_edges = sample.num_edges();
    try {
      rec.measured = ex_random_subgraph(sample, pattern, options.mode, options.subgraph).value;
    } catch (const BudgetExceeded& e) {
      rec.refusal = e.what();
    }
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1 || cells <= 1) {
    for (std::size_t i = 0; i < cells; ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells; i = next++) run_cell(i);
      });
    }
  }
  return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
                     const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << '\n';
  out << "n,p,seed,trial,measured,measured_kind,bound_value,branch,runtime_ms\n";
  char buf[64];
  for (const auto& r : records) {
    out << r.n << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.p);
    out << buf << ',' << r.seed << ',' << r.trial << ',';
    if (r.measured) out << *r.measured;
    out << ',' << to_string(r.measured_kind) << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.bound_value);
    out << buf << ',' << to_string(r.branch) << ',';
    std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
    out << buf << '\n';
  }
}

}  // namespace balsat
