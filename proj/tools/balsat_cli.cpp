// balsat: command-line front end for the balsat library.
//
// Exit status: 0 success, 1 certificate/verification failure or budget refusal,
// 2 usage error (bad flags, unreadable or malformed input).

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "balsat/bundle.hpp"
#include "balsat/edge_list_io.hpp"
#include "balsat/enumerate.hpp"
#include "balsat/family.hpp"
#include "balsat/metrics.hpp"
#include "balsat/pattern.hpp"
#include "balsat/rational.hpp"
#include "balsat/turan.hpp"

namespace {

using namespace balsat;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Resolved configuration of a subcommand: every option with its effective value,
// defaults included. Keys follow the long flag names so the result can be fed back
// through --config.
std::vector<std::pair<std::string, std::string>> resolved_options(const CLI::App& sub) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("subcommand", sub.get_name());
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "config") continue;
    std::string value;
    if (opt->get_expected_max() == 0) {
      value = opt->count() > 0 ? "true" : "false";
    } else if (opt->count() > 0) {
      const auto& results = opt->results();
      for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
    } else {
      value = opt->get_default_str();
    }
    out.emplace_back(name, value);
  }
  return out;
}

Json config_json(const CLI::App& sub) {
  Json j = Json::object();
  for (const auto& [k, v] : resolved_options(sub)) {
    if (v.empty()) {
      j[k] = nullptr;
    } else {
      j[k] = v;
    }
  }
  return j;
}

std::vector<std::string> config_comments(const CLI::App& sub) {
  std::vector<std::string> lines;
  for (const auto& [k, v] : resolved_options(sub)) lines.push_back(k + "=" + v);
  return lines;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

Rational parse_alpha(const std::string& text) {
  const Rational a = parse_rational(text);
  if (a <= 0) throw std::invalid_argument("alpha must be positive");
  return a;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json pattern_json(const Pattern& p) {
  return Json{{"name", p.name()}, {"h", p.h()}, {"ell", p.ell()}, {"r", p.r()}, {"r_partite", p.r_partite()}};
}

Json shape_json(const BoundShape& s) {
  return Json{{"variant", to_string(s.variant)},
              {"threshold_n_exponent", to_string(s.threshold_n_exponent)},
              {"threshold_log_power", to_string(s.threshold_log_power)},
              {"low_n_exponent", to_string(s.low_n_exponent)},
              {"low_log_power", to_string(s.low_log_power)},
              {"high_p_exponent", to_string(s.high_p_exponent)},
              {"high_n_exponent", to_string(s.high_n_exponent)}};
}

std::string config_path_unused;

void add_config_option(CLI::App* sub) {
  sub->add_option("--config", config_path_unused, "Flat key=value file mirroring the flags; flags override it");
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Appends "--key value" for each key=value line of the --config file whose key is not
// already given on the command line, so flags override the file. `args` excludes argv[0].
std::vector<std::string> merge_config_file(std::vector<std::string> args) {
  std::string path;
  std::set<std::string> given;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) continue;
    const auto eq = a.find('=');
    given.insert(a.substr(2, eq == std::string::npos ? std::string::npos : eq - 2));
    if (a == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (a.rfind("--config=", 0) == 0) path = a.substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--config", path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key == "subcommand" || key == "config" || value.empty() || given.contains(key)) continue;
    args.push_back("--" + key);
    args.push_back(value);
  }
  return args;
}

// ---------------------------------------------------------------------------

struct MetricsArgs {
  std::string pattern;
  std::string alpha;
  std::optional<double> k;
  std::optional<std::uint64_t> n;
  std::string out = "-";
};

int run_metrics(const CLI::App& sub, const MetricsArgs& a) {
  const Pattern pattern = load_pattern(a.pattern);
  const Rational alpha = parse_alpha(a.alpha);
  const DensityReport densities = compute_densities(pattern);
  const ExponentSet exponents = compute_exponents(densities, pattern, alpha, a.k, a.n);
  Json j{{"config", config_json(sub)},
         {"pattern", pattern_json(pattern)},
         {"densities", to_json(densities)},
         {"exponents", to_json(exponents)}};
  Json bounds = Json::object();
  if (pattern.r() == 2) {
    for (BoundVariant v : {BoundVariant::General, BoundVariant::EsGood}) {
      try {
        bounds[to_string(v)] = shape_json(bound_shape(densities, pattern, alpha, v));
      } catch (const std::invalid_argument& e) {
        bounds[to_string(v)] = Json{{"unavailable", e.what()}};
      }
    }
  }
  j["random_turan_bounds"] = bounds;
  write_text(a.out, j.dump(2) + "\n");
  return kOk;
}

struct EnumerateArgs {
  std::string host;
  std::string pattern;
  std::size_t limit = 0;
  std::string forbidden;
  std::string out = "-";
};

int run_enumerate(const CLI::App& sub, const EnumerateArgs& a) {
  const Hypergraph host = read_edge_list_file(a.host);
  const Pattern pattern = load_pattern(a.pattern);
  std::vector<EdgeSet> forbidden;
  if (!a.forbidden.empty()) {
    std::ifstream in(a.forbidden);
    if (!in) throw std::runtime_error("cannot open '" + a.forbidden + "'");
    forbidden = read_edge_sets(in);
    for (const auto& s : forbidden) {
      if (!is_valid_edge_set(s, host.num_edges())) {
        throw std::invalid_argument("forbidden set is not a sorted set of host edge indices");
      }
    }
  }
  std::optional<std::size_t> limit;
  if (a.limit > 0) limit = a.limit;
  const auto copies = enumerate_copies(host, pattern, limit, forbidden);
  std::ostringstream text;
  text << Json{{"config", config_json(sub)}, {"copies", copies.size()}}.dump() << '\n';
  for (const auto& c : copies) text << Json(c.edges).dump() << '\n';
  write_text(a.out, text.str());
  return kOk;
}

struct BuildArgs {
  std::string host;
  std::string pattern;
  std::string alpha = "3/2";
  std::string beta_mode = "thm2";
  std::optional<double> beta;
  std::optional<std::uint64_t> n_target;
  std::optional<double> C;
  double delta_prime = 0.25;
  std::string cutoff = "l-1";
  std::optional<double> k;
  std::uint64_t seed = 0;
  std::string out = "family.json";
};

int run_build(const CLI::App& sub, const BuildArgs& a) {
  const Hypergraph host = read_edge_list_file(a.host);
  const Pattern pattern = load_pattern(a.pattern);
  BuildOptions options;
  options.alpha = parse_alpha(a.alpha);
  options.k_override = a.k;
  options.n_target = a.n_target;
  options.delta_prime = a.delta_prime;
  options.C = a.C;
  options.explicit_beta = a.beta;
  options.beta_mode = a.beta_mode == "thm1" ? BetaMode::Thm1
                      : a.beta_mode == "thm2" ? BetaMode::Thm2
                                              : BetaMode::Explicit;
  options.cutoff = a.cutoff == "l" ? Cutoff::Ell : Cutoff::EllMinusOne;

  const FamilyBuild built = build_balanced_family(host, pattern, options);
  const Certificate cert = verify_certificate(built.family);
  const Json bundle = family_bundle(built.family, built.report, cert, config_json(sub));
  write_text(a.out, bundle.dump(2) + "\n");
  Json summary{{"members", built.family.members.size()},
               {"params", bundle.at("params")},
               {"certificate", bundle.at("certificate")},
               {"report", bundle.at("report")}};
  std::cout << summary.dump(2) << '\n';
  return cert.satisfied ? kOk : kFailed;
}

struct VerifyArgs {
  std::string bundle;
  std::string out = "-";
};

int run_verify(const CLI::App& sub, const VerifyArgs& a) {
  const Json bundle = read_json_file(a.bundle);
  const CopyFamily family = family_from_bundle(bundle);
  const Certificate cert = verify_certificate(family);
  const ReplayAudit audit = replay_audit(family);
  const bool ok = cert.satisfied && cert.members_valid && cert.index_consistent &&
                  audit.good_copy_soundness && audit.monotone_saturation && audit.final_bound_holds;
  Json j{{"config", config_json(sub)},
         {"members", family.members.size()},
         {"certificate", to_json(cert)},
         {"replay_audit",
          {{"good_copy_soundness", audit.good_copy_soundness},
           {"monotone_saturation", audit.monotone_saturation},
           {"final_bound_holds", audit.final_bound_holds},
           {"first_violation", audit.first_violation ? Json(*audit.first_violation) : Json(nullptr)}}},
         {"verified", ok}};
  write_text(a.out, j.dump(2) + "\n");
  return ok ? kOk : kFailed;
}

struct ExExactArgs {
  std::size_t n = 0;
  std::string pattern;
  std::uint64_t max_nodes = ExBudget{}.max_nodes;
  std::size_t leaf_cap = ExBudget{}.canonical_leaf_cap;
  std::string out = "-";
};

int run_ex_exact(const CLI::App& sub, const ExExactArgs& a) {
  const Pattern pattern = load_pattern(a.pattern);
  ExBudget budget;
  budget.max_nodes = a.max_nodes;
  budget.canonical_leaf_cap = a.leaf_cap;
  Json j{{"config", config_json(sub)}};
  try {
    const Json record = to_json(ex_exact(a.n, pattern, budget));
    for (const auto& [k, v] : record.items()) j[k] = v;
  } catch (const BudgetExceeded& e) {
    j["refused"] = e.what();
    write_text(a.out, j.dump(2) + "\n");
    return kFailed;
  }
  write_text(a.out, j.dump(2) + "\n");
  return kOk;
}

struct TuranArgs {
  std::string pattern;
  std::string alpha;
  std::vector<std::size_t> n_list;
  std::vector<double> p_list;
  std::size_t trials = 1;
  std::string mode = "exact";
  std::uint64_t seed = 1;
  std::string variant = "general";
  double bound_constant = 1.0;
  std::uint64_t copy_budget = SubgraphOptions{}.copy_budget;
  std::uint64_t node_budget = SubgraphOptions{}.node_budget;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::string out = "results.csv";
};

int run_random_turan(const CLI::App& sub, const TuranArgs& a) {
  const Pattern pattern = load_pattern(a.pattern);
  SweepOptions options;
  options.n_values = a.n_list;
  options.p_values = a.p_list;
  options.trials = a.trials;
  options.mode = a.mode == "greedy" ? SubgraphMode::Greedy : SubgraphMode::Exact;
  options.seed = a.seed;
  options.variant = a.variant != "general" ? BoundVariant::EsGood : BoundVariant::General;
  options.bound_constant = a.bound_constant;
  options.workers = a.workers;
  options.subgraph.copy_budget = a.copy_budget;
  options.subgraph.node_budget = a.node_budget;
  const auto records = random_turan_sweep(pattern, parse_alpha(a.alpha), options);

  std::ostringstream csv;
  write_sweep_csv(csv, records, config_comments(sub));
  write_text(a.out, csv.str());

  // Per-(n, p) summary of measured / bound, in sweep order.
  Json cells = Json::array();
  for (std::size_t start = 0; start < records.size(); start += a.trials) {
    double sum = 0, lo = INFINITY, hi = -INFINITY;
    std::size_t measured = 0, refused = 0;
    for (std::size_t t = start; t < start + a.trials; ++t) {
      const auto& r = records[t];
      if (!r.measured) {
        ++refused;
        continue;
      }
      const double ratio = static_cast<double>(*r.measured) / r.bound_value;
      sum += ratio;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      ++measured;
    }
    Json cell{{"n", records[start].n},
              {"p", format_double(records[start].p)},
              {"branch", to_string(records[start].branch)},
              {"bound_value", records[start].bound_value},
              {"measured_trials", measured},
              {"refused_trials", refused}};
    if (measured > 0) {
      cell["mean_ratio"] = sum / static_cast<double>(measured);
      cell["min_ratio"] = lo;
      cell["max_ratio"] = hi;
    }
    cells.push_back(cell);
  }
  std::cout << Json{{"records", records.size()}, {"out", a.out}, {"summary", cells}}.dump(2) << '\n';
  return kOk;
}

struct CodegreeArgs {
  std::string bundle;
  std::string tau;
  std::string out = "-";
};

int run_codegree(const CLI::App& sub, const CodegreeArgs& a) {
  const CopyFamily family = family_from_bundle(read_json_file(a.bundle));
  const Rational tau = parse_rational(a.tau);
  std::vector<EdgeSet> members;
  members.reserve(family.members.size());
  for (const auto& m : family.members) members.push_back(m.edges);
  const Rational delta = codegree_function(members, tau);
  Json j{{"config", config_json(sub)},
         {"members", members.size()},
         {"tau", to_string(tau)},
         {"delta", to_string(delta)},
         {"delta_approx", to_double(delta)}};
  write_text(a.out, j.dump(2) + "\n");
  return kOk;
}

struct SampleArgs {
  std::size_t n = 0;
  double p = 0;
  std::size_t r = 2;
  std::uint64_t seed = 1;
  std::string out;
};

int run_sample(const CLI::App& sub, const SampleArgs& a) {
  if (!(a.p >= 0.0 && a.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  const Hypergraph g = gnp_sample(a.n, a.p, a.r, a.seed);
  std::ostringstream text;
  write_edge_list(text, g, config_comments(sub));
  write_text(a.out, text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced supersaturation toolkit: densities, copy enumeration, balanced "
               "families with degree certificates, and random Turan experiments."};
  app.name("balsat");
  app.require_subcommand(1);

  const std::vector<std::string> beta_modes{"thm1", "thm2", "explicit"};

  MetricsArgs metrics;
  auto* m = app.add_subcommand("metrics", "Densities and exponents of a pattern (JSON)");
  add_config_option(m);
  m->add_option("--pattern", metrics.pattern, "Edge-list file or builtin:<descriptor>")->required();
  m->add_option("--alpha", metrics.alpha, "Exponent alpha as p/q or an exact decimal")->required();
  m->add_option("--k", metrics.k, "k = e(G)/n^alpha for the beta values");
  m->add_option("--n", metrics.n, "Host order n for the thm2 beta");
  m->add_option("--out", metrics.out, "Output path ('-' for stdout)")->capture_default_str();

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "Copies of a pattern as JSON lines of edge-index arrays");
  add_config_option(e);
  e->add_option("--host", enumerate.host, "Host edge-list file")->required();
  e->add_option("--pattern", enumerate.pattern, "Edge-list file or builtin:<descriptor>")->required();
  e->add_option("--limit", enumerate.limit, "Stop after this many copies (0 = all)")->capture_default_str();
  e->add_option("--forbidden", enumerate.forbidden, "File of edge-index sets a copy must not contain");
  e->add_option("--out", enumerate.out, "Output path ('-' for stdout)")->capture_default_str();

  BuildArgs build;
  auto* b = app.add_subcommand("build-family", "Greedy balanced family with a certificate bundle");
  add_config_option(b);
  b->add_option("--host", build.host, "Host edge-list file")->required();
  b->add_option("--pattern", build.pattern, "Edge-list file or builtin:<descriptor>")->required();
  b->add_option("--alpha", build.alpha, "Exponent alpha as p/q or an exact decimal")->capture_default_str();
  b->add_option("--beta-mode", build.beta_mode, "thm1, thm2 or explicit")
      ->check(CLI::IsMember(beta_modes))
      ->capture_default_str();
  b->add_option("--beta", build.beta, "Beta for --beta-mode explicit");
  b->add_option("--n-target", build.n_target, "Target family size (default floor(delta' k^((h-r)/(r-alpha)) e(G)))");
  b->add_option("--c", build.C, "Constant C (default 4/delta')");
  b->add_option("--delta-prime", build.delta_prime, "delta' used by the defaults of N and C")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  b->add_option("--cutoff", build.cutoff, "Largest controlled subset size: l-1 or l")
      ->check(CLI::IsMember({"l-1", "l"}))
      ->capture_default_str();
  b->add_option("--k", build.k, "Override k = e(G)/n^alpha");
  b->add_option("--seed", build.seed, "Recorded for provenance; the build itself is deterministic")
      ->capture_default_str();
  b->add_option("--out", build.out, "Bundle path")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Re-verify a certificate bundle from scratch");
  add_config_option(v);
  v->add_option("--bundle", verify.bundle, "Bundle written by build-family")->required();
  v->add_option("--out", verify.out, "Report path ('-' for stdout)")->capture_default_str();

  ExExactArgs ex;
  auto* x = app.add_subcommand("ex-exact", "Exact extremal number ex(n, H) with a witness");
  add_config_option(x);
  x->add_option("--n", ex.n, "Number of vertices")->required()->check(CLI::Range(0, 64));
  x->add_option("--pattern", ex.pattern, "Edge-list file or builtin:<descriptor>")->required();
  x->add_option("--max-nodes", ex.max_nodes, "Search node budget")->check(CLI::PositiveNumber)->capture_default_str();
  x->add_option("--leaf-cap", ex.leaf_cap, "Canonical-form leaf cap")->check(CLI::PositiveNumber)->capture_default_str();
  x->add_option("--out", ex.out, "Output path ('-' for stdout)")->capture_default_str();

  TuranArgs turan;
  auto* t = app.add_subcommand("random-turan", "Measured ex(G(n,p), H) against the bound formulas (CSV)");
  add_config_option(t);
  t->add_option("--pattern", turan.pattern, "Edge-list file or builtin:<descriptor>")->required();
  t->add_option("--alpha", turan.alpha, "Exponent alpha as p/q or an exact decimal")->required();
  t->add_option("--n-list", turan.n_list, "Comma-separated host orders")->required()->delimiter(',');
  t->add_option("--p-list", turan.p_list, "Comma-separated edge probabilities")->required()->delimiter(',');
  t->add_option("--trials", turan.trials, "Samples per (n, p)")->check(CLI::PositiveNumber)->capture_default_str();
  t->add_option("--mode", turan.mode, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}))->capture_default_str();
  t->add_option("--seed", turan.seed, "Master seed")->capture_default_str();
  t->add_option("--variant", turan.variant, "Bound variant: general or es-good")
      ->check(CLI::IsMember({"general", "es-good", "es_good"}))
      ->capture_default_str();
  t->add_option("--bound-constant", turan.bound_constant, "Constant C in the bound")->capture_default_str();
  t->add_option("--copy-budget", turan.copy_budget, "Exact mode refuses above this many copies")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  t->add_option("--node-budget", turan.node_budget, "Hitting-set search node budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  t->add_option("--workers", turan.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  t->add_option("--out", turan.out, "CSV path")->capture_default_str();

  CodegreeArgs codegree;
  auto* c = app.add_subcommand("codegree", "Co-degree function of a bundle's family at scale tau");
  add_config_option(c);
  c->add_option("--bundle", codegree.bundle, "Bundle written by build-family")->required();
  c->add_option("--tau", codegree.tau, "Scale tau as p/q or an exact decimal")->required();
  c->add_option("--out", codegree.out, "Output path ('-' for stdout)")->capture_default_str();

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "Sample G(n, p) (or its r-uniform analogue) to an edge-list file");
  add_config_option(s);
  s->add_option("--n", sample.n, "Number of vertices")->required();
  s->add_option("--p", sample.p, "Edge probability")->required();
  s->add_option("--r", sample.r, "Uniformity")->check(CLI::Range(2, 16))->capture_default_str();
  s->add_option("--seed", sample.seed, "Seed")->capture_default_str();
  s->add_option("--out", sample.out, "Edge-list path ('-' for stdout)")->required();

  try {
    std::vector<std::string> args = merge_config_file({argv + 1, argv + argc});
    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector from the back
    app.parse(args);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kOk : kUsage;
  }

  try {
    if (m->parsed()) return run_metrics(*m, metrics);
    if (e->parsed()) return run_enumerate(*e, enumerate);
    if (b->parsed()) return run_build(*b, build);
    if (v->parsed()) return run_verify(*v, verify);
    if (x->parsed()) return run_ex_exact(*x, ex);
    if (t->parsed()) return run_random_turan(*t, turan);
    if (c->parsed()) return run_codegree(*c, codegree);
    if (s->parsed()) return run_sample(*s, sample);
  } catch (const BudgetExceeded& err) {
    std::cerr << "refused: " << err.what() << '\n';
    return kFailed;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
