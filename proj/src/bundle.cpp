#include "balsat/bundle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace balsat {

namespace {

Json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
  if (!value) return nullptr;
  if constexpr (std::is_same_v<T, Rational>) {
    return to_string(*value);
  } else if constexpr (std::is_same_v<T, double>) {
    return finite_or_null(*value);
  } else {
    return *value;
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("bundle is missing \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const Hypergraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(e);
  return Json{{"n", g.num_vertices()}, {"r", g.uniformity()}, {"m", g.num_edges()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  try {
    const auto n = require(j, "n").get<std::size_t>();
    const auto r = require(j, "r").get<std::size_t>();
    auto edges = require(j, "edges").get<std::vector<Edge>>();
    for (auto& e : edges) std::sort(e.begin(), e.end());
    Hypergraph g(n, r, std::move(edges));
    if (j.contains("m") && j.at("m").get<std::size_t>() != g.num_edges()) {
      throw std::invalid_argument("edge count does not match \"m\"");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph: ") + e.what());
  }
}

Json to_json(const DensityReport& report) {
  return Json{{"m_r", to_string(report.m_r)},
              {"m_star_r", to_string(report.m_star_r)},
              {"strictly_balanced", report.strictly_balanced},
              {"witness_m_r", {{"vertices", report.witness_m_r}, {"edges", report.witness_m_r_edges}}},
              {"witness_m_star",
               {{"vertices", report.witness_m_star}, {"edges", report.witness_m_star_edges}}}};
}

Json to_json(const ExponentSet& x) {
  return Json{{"alpha", to_string(x.alpha)},
              {"lambda", to_string(x.lambda)},
              {"lambda_star", optional_json(x.lambda_star)},
              {"phi", optional_json(x.phi)},
              {"k", optional_json(x.k)},
              {"n", optional_json(x.n)},
              {"beta_thm1", optional_json(x.beta_thm1)},
              {"beta_thm2", optional_json(x.beta_thm2)},
              {"alpha_above_density_threshold", x.alpha_above_density_threshold},
              {"lambda_gt_one", x.lambda_gt_one}};
}

Json to_json(const BuildReport& r) {
  Json saturated = Json::array();
  for (std::size_t i = 0; i < r.saturated_bound.size(); ++i) {
    saturated.push_back({{"size", i + 1}, {"bound", finite_or_null(r.saturated_bound[i])}, {"ok", bool(r.saturated_bound_ok[i])}});
  }
  return Json{{"reached_target", r.reached_target},
              {"shortfall", r.shortfall},
              {"copies_examined", r.copies_examined},
              {"iterations", r.iterations},
              {"k", finite_or_null(r.k)},
              {"delta_prime", r.delta_prime},
              {"saturated_per_size", r.saturated_per_size},
              {"saturated_bound", saturated},
              {"threshold_at_cutoff", finite_or_null(r.threshold_at_cutoff)},
              {"threshold_at_cutoff_ge_one", r.threshold_at_cutoff_ge_one},
              {"threshold_at_cutoff_ge_two", r.threshold_at_cutoff_ge_two},
              {"alpha_above_density_threshold", r.alpha_above_density_threshold}};
}

Json to_json(const Certificate& c) {
  Json ratios = Json::array();
  for (double x : c.per_size_max_ratio) ratios.push_back(finite_or_null(x));
  return Json{{"satisfied", c.satisfied},
              {"members_valid", c.members_valid},
              {"index_consistent", c.index_consistent},
              {"worst_s", c.worst_s},
              {"worst_ratio", finite_or_null(c.worst_ratio)},
              {"per_size_max_degree", c.per_size_max_degree},
              {"per_size_max_ratio", ratios}};
}

Json to_json(const ExtremalRecord& rec) {
  return Json{{"n", rec.n},
              {"pattern", rec.pattern_id},
              {"ex", rec.ex_value},
              {"method", to_string(rec.method)},
              {"nodes", rec.nodes},
              {"witness", to_json(rec.witness)}};
}

Json family_bundle(const CopyFamily& family, const BuildReport& report, const Certificate& certificate,
                   const Json& config) {
  Json members = Json::array();
  for (const auto& m : family.members) members.push_back(m.edges);
  Json per_size = Json::array();
  for (std::size_t s = 0; s < certificate.per_size_max_degree.size(); ++s) {
    per_size.push_back({{"size", s + 1},
                        {"max_degree", certificate.per_size_max_degree[s]},
                        {"max_ratio", finite_or_null(certificate.per_size_max_ratio[s])}});
  }
  return Json{{"config", config},
              {"params",
               {{"C", family.params.C},
                {"beta", family.params.beta},
                {"n_target", family.params.n_target},
                {"cutoff", to_string(family.params.cutoff)}}},
              {"host", to_json(family.host)},
              {"pattern", {{"name", family.pattern.name()}, {"graph", to_json(family.pattern.graph())}}},
              {"members", members},
              {"per_size_max", per_size},
              {"certificate", to_json(certificate)},
              {"report", to_json(report)}};
}

CopyFamily family_from_bundle(const Json& bundle) {
  try {
    CopyFamily family;
    family.host = hypergraph_from_json(require(bundle, "host"));
    const Json& pat = require(bundle, "pattern");
    family.pattern = Pattern(hypergraph_from_json(require(pat, "graph")), require(pat, "name").get<std::string>());
    const Json& params = require(bundle, "params");
    family.params.C = require(params, "C").get<double>();
    family.params.beta = require(params, "beta").get<double>();
    family.params.n_target = require(params, "n_target").get<std::uint64_t>();
    const auto cutoff = require(params, "cutoff").get<std::string>();
    if (cutoff == "l") {
      family.params.cutoff = Cutoff::Ell;
    } else if (cutoff == "l-1") {
      family.params.cutoff = Cutoff::EllMinusOne;
    } else {
      throw std::invalid_argument("unknown cutoff \"" + cutoff + "\"");
    }
    for (const auto& m : require(bundle, "members")) {
      Copy c;
      c.edges = m.get<EdgeSet>();
      family.add(std::move(c));
    }
    return family;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed bundle: ") + e.what());
  }
}

}  // namespace balsat
