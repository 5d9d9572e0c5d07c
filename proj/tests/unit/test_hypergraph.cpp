#include <doctest.h>

#include <cmath>
#include <sstream>

#include "balsat/edge_list_io.hpp"
#include "balsat/hypergraph.hpp"
#include "balsat/rng.hpp"

using namespace balsat;

TEST_CASE("construction normalizes and validates") {
  const Hypergraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.num_edges() == 4);
  CHECK(c4.has_edge(Edge{0, 3}));
  CHECK(c4.incidence_consistent());

  const auto built = build(3, 2, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(built.graph.num_edges() == 2);
  CHECK(built.duplicates_dropped == 1);

  const Hypergraph path3(5, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  CHECK(path3.num_edges() == 3);
  CHECK(path3.uniformity() == 3);

  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 1, {}), std::invalid_argument);
}

TEST_CASE("standard constructors") {
  CHECK(complete_graph(4).num_edges() == 6);
  CHECK(complete_bipartite(2, 3).num_edges() == 6);
  CHECK(cycle(4).num_edges() == 4);
  CHECK(cycle(4).num_vertices() == 4);
  CHECK(complete_uniform(6, 3).num_edges() == 20);
  CHECK(path(5).num_edges() == 4);
  const Hypergraph q3 = cube_graph();
  CHECK(q3.num_vertices() == 8);
  CHECK(q3.num_edges() == 12);
  for (Vertex v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);
}

TEST_CASE("G(n,p) sampling") {
  CHECK(gnp_sample(10, 0.0, 2, 1).num_edges() == 0);
  CHECK(gnp_sample(10, 1.0, 2, 1).num_edges() == 45);
  CHECK(gnp_sample(30, 0.3, 2, 9) == gnp_sample(30, 0.3, 2, 9));
  CHECK(gnp_sample(8, 1.0, 3, 2).num_edges() == 56);

  int inside = 0;
  const int seeds = 200;
  const double tol = 4 * std::sqrt(4950 * 0.25);
  for (int s = 0; s < seeds; ++s) {
    const double e = static_cast<double>(gnp_sample(100, 0.5, 2, derive_seed(3, s)).num_edges());
    inside += std::abs(e - 2475) <= tol;
  }
  CHECK(inside >= seeds - 1);
}

TEST_CASE("subgraph helpers") {
  const Hypergraph k5 = complete_graph(5);
  const std::vector<Vertex> w{1, 3, 4};
  const Hypergraph sub = induced_subgraph(k5, w);
  CHECK(sub == complete_graph(3));
  CHECK(induced_edge_count(k5, w) == 3);

  std::vector<Vertex> spanned;
  const Hypergraph es = edge_subgraph(cycle(6), {0, 1}, &spanned);
  CHECK(es.num_vertices() == 3);
  CHECK(es.num_edges() == 2);

  const std::vector<Vertex> perm{3, 2, 1, 0};
  CHECK(relabel(path(4), perm) == path(4));
}

TEST_CASE("edge-list round trip") {
  const Hypergraph g = gnp_sample(12, 0.4, 2, 5);
  std::stringstream text;
  write_edge_list(text, g, {"seed=5"});
  CHECK(text.str().rfind("# seed=5\n", 0) == 0);
  CHECK(read_edge_list(text) == g);

  std::stringstream bad("3 2 2\n0 1\n");
  CHECK_THROWS(read_edge_list(bad));
  std::stringstream extra("3 1 2\n0 1 2\n");
  CHECK_THROWS(read_edge_list(extra));
  std::stringstream comments("# hi\n3 1 2 # header\n0 1 # edge\n");
  CHECK(read_edge_list(comments).num_edges() == 1);
}
