#include <doctest.h>

#include "balsat/bundle.hpp"
#include "balsat/rng.hpp"

using namespace balsat;

TEST_CASE("graph JSON round trip") {
  const Hypergraph g = gnp_sample(10, 0.5, 2, 3);
  CHECK(hypergraph_from_json(to_json(g)) == g);
  CHECK_THROWS(hypergraph_from_json(Json{{"n", 3}, {"r", 2}, {"edges", {{0, 7}}}}));
  CHECK_THROWS(hypergraph_from_json(Json{{"n", 3}}));
}

TEST_CASE("density JSON uses exact rationals") {
  const auto j = to_json(compute_densities(cycle(4)));
  CHECK(j.at("m_r") == "3/2");
  CHECK(j.at("m_star_r") == "1");
}

TEST_CASE("family bundle round trip") {
  const Hypergraph host = gnp_sample(16, 0.5, 2, 8);
  const Pattern c4 = builtin_pattern("cycle:4");
  const auto built = build_balanced_family(host, c4, {});
  const auto cert = verify_certificate(built.family);
  const Json bundle = family_bundle(built.family, built.report, cert, Json{{"seed", "8"}});
  const CopyFamily back = family_from_bundle(Json::parse(bundle.dump()));
  CHECK(back.host == host);
  CHECK(back.pattern.graph() == c4.graph());
  CHECK(back.members == built.family.members);
  CHECK(back.degrees == built.family.degrees);
  CHECK(back.params.n_target == built.family.params.n_target);
  CHECK(back.params.C == built.family.params.C);
  CHECK(back.params.beta == built.family.params.beta);
  CHECK(verify_certificate(back).satisfied == cert.satisfied);

  Json bad = bundle;
  bad["params"]["cutoff"] = "l+1";
  CHECK_THROWS_AS(family_from_bundle(bad), std::invalid_argument);
  bad = bundle;
  bad.erase("members");
  CHECK_THROWS_AS(family_from_bundle(bad), std::invalid_argument);
}
