#include <doctest.h>

#include <cmath>
#include <sstream>

#include "balsat/binomial.hpp"
#include "balsat/enumerate.hpp"
#include "balsat/rng.hpp"
#include "balsat/small_graph.hpp"
#include "balsat/turan.hpp"
#include "oracles/oracles.hpp"

using namespace balsat;

TEST_CASE("ex(n, C4) small values") {
  const Pattern c4 = builtin_pattern("cycle:4");
  CHECK(ex_exact(4, c4).ex_value == 4);
  CHECK(ex_exact(5, c4).ex_value == 6);
  CHECK(ex_exact(3, c4).ex_value == 3);
  CHECK(ex_exact(1, c4).ex_value == 0);
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto rec = ex_exact(n, c4);
    CHECK(rec.ex_value == oracle::ex_c4(n));
    CHECK(rec.witness.num_edges() == rec.ex_value);
    CHECK(count_copies(rec.witness, c4) == 0);
  }
}

TEST_CASE("ex(n, C4) via augmentation matches known values") {
  const Pattern c4 = builtin_pattern("cycle:4");
  // 0, 1, 3, 4, 6, 7, 9, 11, 13, 16, 18, 21 for n = 1..12.
  const std::uint64_t known[] = {0, 0, 1, 3, 4, 6, 7, 9, 11, 13, 16, 18, 21};
  std::uint64_t previous = 0;
  for (std::size_t n = 8; n <= 12; ++n) {
    const auto rec = ex_exact(n, c4);
    CHECK(rec.ex_value == known[n]);
    CHECK(rec.method == (n * (n - 1) / 2 <= 28 ? ExMethod::Exhaustive : ExMethod::BranchAndBound));
    CHECK(rec.witness.num_edges() == rec.ex_value);
    CHECK(count_copies(rec.witness, c4) == 0);
    CHECK(rec.ex_value >= previous);
    previous = rec.ex_value;
  }
}

TEST_CASE("ex for other patterns") {
  CHECK(ex_exact(5, builtin_pattern("complete:3")).ex_value == 6);    // Turan: floor(25/4)
  CHECK(ex_exact(9, builtin_pattern("complete:3")).ex_value == 20);   // floor(81/4)
  CHECK(ex_exact(5, builtin_pattern("cycle:6")).ex_value == 10);      // no copy fits
  CHECK(ex_exact(6, builtin_pattern("path:3")).ex_value == 3);        // perfect matching
  CHECK_THROWS_AS(ex_exact(12, builtin_pattern("cycle:4"), ExBudget{50, 20000}), BudgetExceeded);
}

TEST_CASE("canonical forms identify isomorphic graphs") {
  for (int t = 0; t < 50; ++t) {
    const Hypergraph g = gnp_sample(9, 0.4, 2, derive_seed(8, t));
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    Philox4x32 rng(t);
    for (std::size_t i = 8; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    const auto a = small::canonical_form(small::BitGraph::from(g));
    const auto b = small::canonical_form(small::BitGraph::from(relabel(g, perm)));
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*a == *b);
  }
  const auto c6 = small::canonical_form(small::BitGraph::from(cycle(6)));
  const auto two_triangles = small::canonical_form(small::BitGraph::from(
      Hypergraph(6, 2, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
  CHECK(*c6 != *two_triangles);
}

TEST_CASE("largest H-free subgraphs") {
  const Pattern c4 = builtin_pattern("cycle:4");
  SubgraphOptions no_shortcut;
  no_shortcut.complete_host_shortcut = false;
  CHECK(ex_random_subgraph(complete_graph(4), c4, SubgraphMode::Exact, no_shortcut).value == 4);
  CHECK(ex_random_subgraph(complete_graph(4), c4, SubgraphMode::Exact).value == 4);
  CHECK(ex_random_subgraph(cycle(6), c4, SubgraphMode::Exact).value == 6);
  CHECK(ex_random_subgraph(complete_bipartite(2, 3), c4, SubgraphMode::Exact).value == 4);

  for (int t = 0; t < 40; ++t) {
    const Hypergraph g = gnp_sample(8, 0.45, 2, derive_seed(21, t));
    const auto exact = ex_random_subgraph(g, c4, SubgraphMode::Exact);
    const auto greedy = ex_random_subgraph(g, c4, SubgraphMode::Greedy);
    CHECK(greedy.value <= exact.value);
    CHECK(exact.value <= g.num_edges());
    std::vector<Edge> kept;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      if (!std::binary_search(exact.removed.begin(), exact.removed.end(), e)) kept.push_back(g.edge_vector(e));
    }
    CHECK(count_copies(Hypergraph(8, 2, kept), c4) == 0);
    if (exact.copies <= 20) {
      std::vector<std::vector<std::uint32_t>> sets;
      for (const auto& c : enumerate_copies(g, c4)) sets.push_back(c.edges);
      CHECK(exact.value == g.num_edges() - oracle::min_hitting_set_size(sets));
    }
  }

  SubgraphOptions tiny;
  tiny.copy_budget = 2;
  CHECK_THROWS_AS(ex_random_subgraph(complete_graph(5), c4, SubgraphMode::Exact,
                                     SubgraphOptions{2, 1000, false, {}}),
                  BudgetExceeded);
}

TEST_CASE("deletion lower bound") {
  const Pattern c4 = builtin_pattern("cycle:4");
  CHECK(deletion_lower_bound(6, 4) == 2);
  CHECK(deletion_lower_bound(6, 6) == 0);
  CHECK(deletion_lower_bound(3, 6) == 0);
  for (int t = 0; t < 30; ++t) {
    const Hypergraph g = gnp_sample(7, 0.5, 2, derive_seed(4, t));
    CHECK(count_copies(g, c4) >= deletion_lower_bound(g.num_edges(), ex_exact(7, c4).ex_value));
  }
}

TEST_CASE("random subset experiment") {
  const Pattern c4 = builtin_pattern("cycle:4");
  const Hypergraph k40 = complete_graph(40);
  const auto empty = random_subset_experiment(k40, c4, Rational(3, 2), 1.0, 0, 1);
  CHECK(empty.induced_edges.empty());

  const auto full = random_subset_experiment(k40, c4, Rational(3, 2), 1.0, 5, 1, 40);
  for (auto e : full.induced_edges) CHECK(e == 780);

  const auto rep = random_subset_experiment(k40, c4, Rational(3, 2), 1.0, 300, 3, 10);
  CHECK(rep.expected_edges == doctest::Approx(45.0));
  CHECK(std::abs(rep.mean_edges - rep.expected_edges) <= 4 * rep.stderr_edges + 1e-9);

  const auto chosen = random_subset_experiment(k40, c4, Rational(3, 2), 0.05, 20, 3);
  CHECK(chosen.w >= std::ceil(40 * chosen.p_min));
  CHECK(static_cast<double>(chosen.w) <= 2 * 40 * chosen.p_min);
  CHECK_FALSE(chosen.admissible_A);

  CHECK_THROWS_AS(random_subset_experiment(cycle(40), c4, Rational(3, 2), 1.0, 3, 1), std::invalid_argument);
}

TEST_CASE("ES-good ratio") {
  const Pattern c4 = builtin_pattern("cycle:4");
  const auto k6 = es_good_check(complete_graph(6), c4);
  CHECK(k6.copies == 45);
  CHECK(k6.ratio == doctest::Approx(45.0 * 1296 / 50625));
  CHECK(es_good_check(Hypergraph(5, 2, {}), c4).ratio == 0);
  CHECK(es_good_check(complete_bipartite(2, 3), c4).ratio == doctest::Approx(3.0 * 625 / 1296));
}

TEST_CASE("random Turan sweep") {
  const Pattern c4 = builtin_pattern("cycle:4");
  SweepOptions opt;
  opt.n_values = {10, 12};
  opt.p_values = {0.0, 1.0};
  opt.trials = 1;
  const auto recs = random_turan_sweep(c4, Rational(3, 2), opt);
  REQUIRE(recs.size() == 4);
  CHECK(*recs[0].measured == 0);
  CHECK(*recs[1].measured == 16);
  CHECK(*recs[3].measured == 21);
  CHECK(recs[3].n == 12);

  SweepOptions greedy;
  greedy.n_values = {14};
  greedy.p_values = {0.3};
  greedy.mode = SubgraphMode::Greedy;
  greedy.seed = 7;
  greedy.trials = 3;
  greedy.workers = 2;
  const auto g = random_turan_sweep(c4, Rational(3, 2), greedy);
  greedy.workers = 1;
  const auto g1 = random_turan_sweep(c4, Rational(3, 2), greedy);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(*g[i].measured <= g[i].host_edges);
    CHECK(*g[i].measured == *g1[i].measured);
    CHECK(g[i].seed == g1[i].seed);
    const auto exact = ex_random_subgraph(gnp_sample(14, 0.3, 2, g[i].seed), c4, SubgraphMode::Exact);
    CHECK(*g[i].measured <= exact.value);
  }

  std::ostringstream csv;
  write_sweep_csv(csv, recs, {"seed=1"});
  CHECK(csv.str().rfind("# seed=1\nn,p,seed,trial,measured,measured_kind,bound_value,branch,runtime_ms\n", 0) == 0);

  SweepOptions refuse = opt;
  refuse.n_values = {9};
  refuse.p_values = {1.0};
  refuse.subgraph.copy_budget = 5;
  refuse.subgraph.complete_host_shortcut = false;
  const auto r = random_turan_sweep(c4, Rational(3, 2), refuse);
  CHECK_FALSE(r[0].measured);
  CHECK_FALSE(r[0].refusal.empty());
}
