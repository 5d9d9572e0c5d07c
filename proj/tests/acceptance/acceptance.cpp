// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and pinned
// regression values live next to each check.
//
// Usage: acceptance --cli <path to balsat> --workdir <scratch dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "balsat/binomial.hpp"
#include "balsat/enumerate.hpp"
#include "balsat/family.hpp"
#include "balsat/metrics.hpp"
#include "balsat/rng.hpp"
#include "balsat/turan.hpp"
#include "oracles/oracles.hpp"

namespace fs = std::filesystem;
using namespace balsat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// 1. compute_densities equals the all-subgraphs oracle on the h <= 8 corpus, < 10 s.
Outcome density_oracle() {
  constexpr double kTimeLimit = 10.0;
  const Clock clock;
  std::vector<Hypergraph> corpus{cycle(4), cycle(6), cycle(8), complete_bipartite(2, 2),
                                 complete_bipartite(2, 3), complete_bipartite(3, 3), cube_graph()};
  for (std::size_t v = 3; v <= 8; ++v) corpus.push_back(path(v));
  std::size_t mismatches = 0;
  for (const auto& h : corpus) {
    const auto got = compute_densities(h);
    const auto want = oracle::densities(h);
    mismatches += got.m_r != want.m_r || got.m_star_r != want.m_star_r;
  }
  const double t = clock.seconds();
  return {mismatches == 0 && t < kTimeLimit,
          std::to_string(corpus.size()) + " patterns, " + std::to_string(mismatches) + " mismatches, " +
              fmt("%.2f s", t)};
}

// 2. Even-cycle identities (exact) and the general ES-good bound against the closed
// form for C_2l at 20 points per l, relative error <= 1e-12.
Outcome cycle_identities() {
  constexpr double kRelTol = 1e-12;
  std::size_t failures = 0, points = 0, low = 0, high = 0;
  double worst = 0;
  for (long long l = 2; l <= 6; ++l) {
    const Pattern c = builtin_pattern("cycle:" + std::to_string(2 * l));
    const Rational alpha = 1 + Rational(1, l);
    const auto d = compute_densities(c);
    const auto x = compute_exponents(d, c, alpha);
    failures += d.m_r != Rational(2 * l - 1, 2 * l - 2);
    failures += d.m_star_r != 1;
    failures += !x.lambda_star || *x.lambda_star != Rational(l, l - 1);
    failures += !x.phi || *x.phi != Rational(l - 1, l * (2 * l - 1));
    const auto s = bound_shape(d, c, alpha, BoundVariant::EsGood);
    failures += s.threshold_n_exponent != Rational(-(l - 1), 2 * l - 1);
    failures += s.threshold_log_power != 2 * l;
    failures += s.low_n_exponent != 1 + Rational(1, 2 * l - 1);
    failures += s.low_log_power != 2;
    failures += s.high_p_exponent != Rational(1, l);
    failures += s.high_n_exponent != 1 + Rational(1, l);

    const long double L = static_cast<long double>(l);
    for (int i = 0; i < 20; ++i) {
      const double n = std::pow(10.0, 2.0 + 9.0 * i);  // 1e2 .. 1e173
      const double C = 0.5 + 0.25 * i;
      const long double ln = std::log(static_cast<long double>(n));
      const long double thr = std::pow(static_cast<long double>(n), -(L - 1) / (2 * L - 1)) * std::pow(ln, 2 * L);
      const long double factor = (i % 2 == 0) ? 0.5L : 2.0L;
      const double p = static_cast<double>(std::min(1.0L, thr * factor));
      const bool want_low = p <= static_cast<double>(thr);
      const long double want =
          want_low ? C * std::pow(static_cast<long double>(n), 1 + 1 / (2 * L - 1)) * ln * ln
                   : C * std::pow(static_cast<long double>(p), 1 / L) * std::pow(static_cast<long double>(n), 1 + 1 / L);
      const BoundValue got = evaluate_bound(s, n, p, C);
      const double rel = static_cast<double>(std::fabs((got.value - want) / want));
      worst = std::max(worst, rel);
      ++points;
      (want_low ? low : high) += 1;
      failures += (got.branch == BoundBranch::Low) != want_low;
      failures += !(rel <= kRelTol);
    }
  }
  return {failures == 0 && low > 0 && high > 0,
          std::to_string(points) + " points (" + std::to_string(low) + " low, " + std::to_string(high) +
              " high), worst rel err " + fmt("%.2e", worst) + ", " + std::to_string(failures) + " failures"};
}

// 3. count * |Aut(H)| = embedding_count and enumerate/count agree on 200 random
// instances with n <= 8, h <= 6, < 60 s.
Outcome copy_counting() {
  constexpr double kTimeLimit = 60.0;
  const Clock clock;
  const std::vector<std::string> patterns{"cycle:4", "cycle:5", "cycle:6", "path:3", "path:4",
                                          "path:5", "path:6", "complete_bipartite:2:2",
                                          "complete_bipartite:2:3", "complete_bipartite:3:3",
                                          "complete:3", "complete:4", "complete:5"};
  Philox4x32 rng(20240601);
  std::size_t failures = 0;
  std::uint64_t total_copies = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 4 + rng.below(5);
    const double p = 0.3 + 0.6 * rng.uniform01();
    const Hypergraph g = gnp_sample(n, p, 2, derive_seed(31, t));
    const Pattern h = builtin_pattern(patterns[rng.below(patterns.size())]);
    const std::uint64_t count = count_copies(g, h);
    const auto copies = enumerate_copies(g, h);
    std::set<EdgeSet> distinct;
    for (const auto& c : copies) distinct.insert(c.edges);
    failures += count * automorphism_count(h.graph()) != embedding_count(g, h.graph());
    failures += copies.size() != count || distinct.size() != count;
    total_copies += count;
  }
  const double t = clock.seconds();
  return {failures == 0 && t < kTimeLimit,
          "200 instances, " + std::to_string(total_copies) + " copies, " + std::to_string(failures) +
              " failures, " + fmt("%.2f s", t)};
}

// 4. For all 1 <= h <= w <= n <= 30: C(n-h,w-h)/C(n,w) <= (w/n)^h, and >= (1/2)(w/n)^h
// when w >= h^2, in exact rationals.
Outcome binomial_ratio_check() {
  std::size_t triples = 0, failures = 0, lower_checked = 0;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t w = 1; w <= n; ++w) {
      for (std::uint64_t h = 1; h <= w; ++h) {
        ++triples;
        const Rational ratio(binomial(n - h, w - h), binomial(n, w));
        const Rational q = pow(Rational(static_cast<long long>(w), static_cast<long long>(n)), static_cast<int>(h));
        failures += !(ratio <= q);
        if (w >= h * h) {
          ++lower_checked;
          failures += !(ratio >= q / 2);
        }
        const auto lib = binom_ratio_bounds(n, w, h);
        failures += !lib.exact || lib.ratio != ratio || !lib.upper_holds || !lib.lower_holds;
      }
    }
  }
  return {failures == 0, std::to_string(triples) + " triples (" + std::to_string(lower_checked) +
                             " with the lower bound), " + std::to_string(failures) + " failures"};
}

// 5. copies(G) >= e(G) - ex(n, C4) on 100 random graphs with n <= 7; ex values equal
// the exhaustive oracle, with ex(4) = 4 and ex(5) = 6 pinned.
Outcome deletion_bound_check() {
  const Pattern c4 = builtin_pattern("cycle:4");
  std::size_t failures = 0;
  std::vector<std::uint64_t> ex(8, 0);
  for (std::size_t n = 1; n <= 7; ++n) {
    ex[n] = ex_exact(n, c4).ex_value;
    failures += ex[n] != oracle::ex_c4(n);
  }
  failures += ex[4] != 4 || ex[5] != 6;
  std::size_t tight = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 4 + static_cast<std::size_t>(t % 4);
    const Hypergraph g = gnp_sample(n, 0.35 + 0.005 * t, 2, derive_seed(53, t));
    const std::uint64_t lower = deletion_lower_bound(g.num_edges(), ex[n]);
    const std::uint64_t copies = count_copies(g, c4);
    failures += copies < lower;
    tight += lower > 0;
  }
  return {failures == 0, "ex(1..7, C4) = " + [&] {
                           std::string s;
                           for (std::size_t n = 1; n <= 7; ++n) s += (n > 1 ? "," : "") + std::to_string(ex[n]);
                           return s;
                         }() + "; 100 graphs (" + std::to_string(tight) + " with a positive bound), " +
                             std::to_string(failures) + " failures"};
}

// 6. Balanced family on G(60, 1/2) (seed 1), C4, thm2 beta, default constants.
// Pinned regression: e(G) = 872, N = 2701, worst ratio 0.56825219740288 (1e-9).
Outcome balanced_family() {
  constexpr double kTimeLimit = 120.0;
  constexpr std::uint64_t kEdges = 872;
  constexpr std::uint64_t kTarget = 2701;
  constexpr double kWorst = 0.56825219740288;
  const Clock clock;
  const Hypergraph g = gnp_sample(60, 0.5, 2, 1);
  BuildOptions options;
  options.beta_mode = BetaMode::Thm2;
  const auto built = build_balanced_family(g, builtin_pattern("cycle:4"), options);
  const auto cert = verify_certificate(built.family);
  const auto audit = replay_audit(built.family);
  const double t = clock.seconds();
  const bool ok = built.report.reached_target && built.family.members.size() >= built.family.params.n_target &&
                  cert.satisfied && cert.worst_ratio <= 1.0 && cert.members_valid && cert.index_consistent &&
                  audit.good_copy_soundness && audit.monotone_saturation && audit.final_bound_holds &&
                  g.num_edges() == kEdges && built.family.params.n_target == kTarget &&
                  std::fabs(cert.worst_ratio - kWorst) <= 1e-9 && t < kTimeLimit;
  return {ok, "e(G) = " + std::to_string(g.num_edges()) + ", |F| = " + std::to_string(built.family.members.size()) +
                  " / N = " + std::to_string(built.family.params.n_target) + ", worst ratio " +
                  fmt("%.14f", cert.worst_ratio) + ", audit " +
                  (audit.good_copy_soundness && audit.monotone_saturation ? "clean" : "VIOLATED") + ", " +
                  fmt("%.2f s", t)};
}

// 7. Co-degree function equals the brute-force evaluator on 50 random families
// (|F| <= 50, l <= 6) and the single-member value sum_{j=2..l} l tau^(1-j).
Outcome codegree() {
  Philox4x32 rng(777);
  std::size_t failures = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t ell = 2 + rng.below(5);
    const std::size_t size = 1 + rng.below(50);
    const std::size_t universe = ell + 2 + rng.below(3 * ell);
    std::set<EdgeSet> members;
    for (int guard = 0; members.size() < size && guard < 10000; ++guard) {
      std::set<std::uint32_t> s;
      while (s.size() < ell) s.insert(static_cast<std::uint32_t>(rng.below(universe)));
      members.insert(EdgeSet(s.begin(), s.end()));
    }
    const std::vector<EdgeSet> fam(members.begin(), members.end());
    const Rational tau(1 + static_cast<long long>(rng.below(7)), 1 + static_cast<long long>(rng.below(4)));
    failures += codegree_function(fam, tau) != oracle::codegree(fam, tau);
  }
  std::size_t analytic = 0;
  for (long long ell = 2; ell <= 6; ++ell) {
    for (const Rational tau : {Rational(1), Rational(3, 2), Rational(7), Rational(2, 5)}) {
      EdgeSet member;
      for (long long i = 0; i < ell; ++i) member.push_back(static_cast<EdgeIndex>(3 * i + 1));
      Rational want = 0;
      for (long long j = 2; j <= ell; ++j) want += Rational(ell) * pow(1 / tau, static_cast<int>(j - 1));
      failures += codegree_function(std::vector<EdgeSet>{member}, tau) != want;
      ++analytic;
    }
  }
  return {failures == 0,
          "50 random families + " + std::to_string(analytic) + " single-member cases, " +
              std::to_string(failures) + " failures"};
}

// 8. Exact largest H-free subgraph equals e(G) minus an exhaustive minimum hitting set
// on every instance with <= 20 copies; at p = 1 it equals ex(n, H); greedy <= exact.
Outcome exact_cell() {
  const std::vector<std::string> names{"cycle:4", "complete_bipartite:2:3", "cycle:6", "complete:3"};
  std::size_t checked = 0, failures = 0, compared = 0;
  SubgraphOptions no_shortcut;
  no_shortcut.complete_host_shortcut = false;
  for (int t = 0; t < 160; ++t) {
    const Pattern h = builtin_pattern(names[static_cast<std::size_t>(t) % names.size()]);
    const std::size_t n = 5 + static_cast<std::size_t>(t % 4);
    const Hypergraph g = gnp_sample(n, 0.3 + 0.004 * t, 2, derive_seed(71, t));
    const auto copies = enumerate_copies(g, h);
    const auto exact = ex_random_subgraph(g, h, SubgraphMode::Exact, no_shortcut);
    const auto greedy = ex_random_subgraph(g, h, SubgraphMode::Greedy);
    failures += greedy.value > exact.value;
    ++compared;
    if (copies.size() <= 20) {
      std::vector<std::vector<std::uint32_t>> sets;
      for (const auto& c : copies) sets.push_back(c.edges);
      failures += exact.value != g.num_edges() - oracle::min_hitting_set_size(sets);
      ++checked;
    }
  }
  std::size_t complete_hosts = 0;
  for (const auto& name : {"cycle:4", "complete:3"}) {
    const Pattern h = builtin_pattern(name);
    for (std::size_t n = 4; n <= 7; ++n) {
      const Hypergraph k = gnp_sample(n, 1.0, 2, 5);
      const auto exact = ex_random_subgraph(k, h, SubgraphMode::Exact, no_shortcut);
      const auto greedy = ex_random_subgraph(k, h, SubgraphMode::Greedy);
      failures += exact.value != ex_exact(n, h).ex_value;
      failures += greedy.value > exact.value;
      ++complete_hosts;
      ++compared;
    }
  }
  SweepOptions sweep;
  sweep.n_values = {12};
  sweep.p_values = {1.0};
  const auto rec = random_turan_sweep(builtin_pattern("cycle:4"), Rational(3, 2), sweep);
  failures += !rec[0].measured || *rec[0].measured != ex_exact(12, builtin_pattern("cycle:4")).ex_value;
  return {failures == 0 && checked >= 50,
          std::to_string(checked) + " instances vs exhaustive hitting sets, " + std::to_string(complete_hosts) +
              " complete hosts at p = 1, greedy <= exact on " + std::to_string(compared) + ", " +
              std::to_string(failures) + " failures"};
}

// 9. Mean of e(G[W]) over 500 subsets of size 10 of K40 within 4 standard errors of
// e(G) C(38,8) / C(40,10). Every 10-subset of K40 spans exactly 45 edges, so the
// standard error there is 0 and the check demands equality; a seeded G(40, 1/2)
// host is checked the same way to exercise a nonzero variance.
Outcome hypergeometric() {
  constexpr double kSigmas = 4.0;
  std::string detail;
  bool ok = true;
  for (const auto& [label, host] : {std::pair{"K40", complete_graph(40)},
                                     std::pair{"G(40,1/2)", gnp_sample(40, 0.5, 2, 40)}}) {
    const auto rep = random_subset_experiment(host, builtin_pattern("cycle:4"), Rational(3, 2), 1.0, 500, 9, 10);
    const double expected = static_cast<double>(host.num_edges()) *
                            to_double(Rational(binomial(38, 8), binomial(40, 10)));
    const double diff = std::fabs(rep.mean_edges - expected);
    ok = ok && diff <= kSigmas * rep.stderr_edges + 1e-12 && std::fabs(rep.expected_edges - expected) < 1e-9;
    detail += std::string(detail.empty() ? "" : "; ") + label + ": mean " + fmt("%.4f", rep.mean_edges) +
              " vs " + fmt("%.4f", expected) + ", stderr " + fmt("%.4f", rep.stderr_edges);
  }
  return {ok, detail};
}

// 10. Repeated seeded CLI runs give byte-identical artifacts (CSV timing column removed).
std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_runtime(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') line = line.substr(0, line.rfind(','));
    out += line + '\n';
  }
  return out;
}

Outcome determinism(const std::string& cli, const fs::path& workdir) {
  const std::vector<std::pair<std::string, std::string>> runs{
      {"sample --n 40 --p 0.4 --seed 17 --out host.txt", "host.txt"},
      {"metrics --pattern builtin:cycle:6 --alpha 4/3 --k 3 --n 40 --out metrics.json", "metrics.json"},
      {"enumerate --host host.txt --pattern builtin:cycle:4 --limit 500 --out copies.jsonl", "copies.jsonl"},
      {"build-family --host host.txt --pattern builtin:cycle:4 --alpha 3/2 --beta-mode thm2 --seed 17 "
       "--out family.json",
       "family.json"},
      {"verify --bundle family.json --out verify.json", "verify.json"},
      {"codegree --bundle family.json --tau 3/2 --out codegree.json", "codegree.json"},
      {"ex-exact --n 9 --pattern builtin:cycle:4 --out ex.json", "ex.json"},
      {"random-turan --pattern builtin:cycle:4 --alpha 3/2 --n-list 8,11 --p-list 0.3,0.6,1 --trials 3 "
       "--mode exact --seed 5 --workers 3 --out exact.csv",
       "exact.csv"},
      {"random-turan --pattern builtin:cycle:4 --alpha 3/2 --n-list 14,30 --p-list 0.3 --trials 4 "
       "--mode greedy --variant es-good --seed 7 --workers 2 --out greedy.csv",
       "greedy.csv"},
      {"sample --n 12 --p 0.5 --r 3 --seed 2 --out hyper.txt", "hyper.txt"},
  };
  std::size_t identical = 0, failures = 0;
  std::string first_bad;
  std::vector<fs::path> dirs{workdir / "run_a", workdir / "run_b"};
  for (const auto& d : dirs) {
    fs::remove_all(d);
    fs::create_directories(d);
  }
  for (const auto& [args, artifact] : runs) {
    std::vector<std::string> contents;
    for (const auto& d : dirs) {
      const std::string cmd = "cd \"" + d.string() + "\" && \"" + cli + "\" " + args + " > stdout.txt 2> stderr.txt";
      const int status = std::system(cmd.c_str());
      if (status != 0) {
        ++failures;
        if (first_bad.empty()) first_bad = args.substr(0, args.find(' ')) + " exited nonzero";
      }
      std::string text = read_file(d / artifact);
      if (artifact.ends_with(".csv")) text = strip_runtime(text);
      contents.push_back(text);
    }
    if (!contents[0].empty() && contents[0] == contents[1]) {
      ++identical;
    } else {
      ++failures;
      if (first_bad.empty()) first_bad = artifact + " differs";
    }
  }
  return {failures == 0, std::to_string(identical) + "/" + std::to_string(runs.size()) +
                             " artifacts byte-identical" + (first_bad.empty() ? "" : " (" + first_bad + ")")};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  fs::path workdir = fs::temp_directory_path() / "balsat_acceptance";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") {
      cli = fs::absolute(argv[i + 1]).string();
    } else if (flag == "--workdir") {
      workdir = fs::absolute(argv[i + 1]);
    } else {
      std::cerr << "usage: acceptance --cli <balsat> --workdir <dir>\n";
      return 2;
    }
  }
  if (cli.empty()) {
    std::cerr << "usage: acceptance --cli <balsat> --workdir <dir>\n";
    return 2;
  }
  fs::create_directories(workdir);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"density oracle equivalence", density_oracle},
      {"even-cycle specialization identities", cycle_identities},
      {"copy-counting oracle equivalence", copy_counting},
      {"hypergeometric ratio bounds, n <= 30", binomial_ratio_check},
      {"deletion lower bound with exact ex(n, C4)", deletion_bound_check},
      {"balanced-family certificate on G(60, 1/2)", balanced_family},
      {"co-degree function", codegree},
      {"exact random-Turan cell", exact_cell},
      {"hypergeometric sampling mean", hypergeometric},
      {"CLI determinism", [&] { return determinism(cli, workdir); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
