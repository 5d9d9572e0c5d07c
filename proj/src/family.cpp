#include "balsat/family.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace balsat {

namespace {

constexpr std::size_t kMaxMemberSize = 16;

// Calls fn(subset) for every nonempty subset of `member` with size <= max_size.
template <typename Fn>
void for_each_subset(const EdgeSet& member, std::size_t max_size, Fn&& fn) {
  const std::size_t m = member.size();
  if (m > kMaxMemberSize) throw std::invalid_argument("family members larger than 16 edges");
  EdgeSet subset;
  subset.reserve(m);
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_size) continue;
    subset.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1U << i)) subset.push_back(member[i]);
    }
    fn(static_cast<const EdgeSet&>(subset));
  }
}

}  // namespace

const char* to_string(Cutoff c) { return c == Cutoff::Ell ? "l" : "l-1"; }

const char* to_string(BetaMode m) {
  switch (m) {
    case BetaMode::Thm1: return "thm1";
    case BetaMode::Thm2: return "thm2";
    case BetaMode::Explicit: return "explicit";
  }
  return "?";
}

void DegreeIndex::add_member(const EdgeSet& member) {
  for_each_subset(member, member.size(), [&](const EdgeSet& s) { ++degrees_[s]; });
}

std::uint64_t DegreeIndex::degree(const EdgeSet& s) const {
  const auto it = degrees_.find(s);
  return it == degrees_.end() ? 0 : it->second;
}

double saturation_threshold(double C, double beta, double n_target, double e_g, std::size_t s) {
  if (s < 1) throw std::invalid_argument("saturation_threshold: subset size must be >= 1");
  return C * std::pow(beta, static_cast<double>(s) - 1.0) * n_target / (2.0 * e_g);
}

FamilyBuild build_balanced_family(const Hypergraph& host, const Pattern& pattern,
                                  const BuildOptions& options) {
  if (host.uniformity() != pattern.r()) throw std::invalid_argument("uniformity mismatch");
  if (!pattern.r_partite()) throw std::invalid_argument("pattern is not r-partite");
  if (host.num_edges() == 0) throw std::invalid_argument("host has no edges");
  if (!(options.delta_prime > 0)) throw std::invalid_argument("delta' must be positive");

  const double e_g = static_cast<double>(host.num_edges());
  const double n = static_cast<double>(host.num_vertices());
  const double alpha = to_double(options.alpha);
  const double k = options.k_override ? *options.k_override : e_g / std::pow(n, alpha);

  const DensityReport densities = compute_densities(pattern);
  const ExponentSet exponents =
      compute_exponents(densities, pattern, options.alpha, k, host.num_vertices());

  double beta = 0;
  switch (options.beta_mode) {
    case BetaMode::Thm1:
      beta = *exponents.beta_thm1;
      break;
    case BetaMode::Thm2:
      if (!exponents.beta_thm2) throw std::invalid_argument("thm2 beta needs a graph pattern with m*_2 > 0");
      beta = *exponents.beta_thm2;
      break;
    case BetaMode::Explicit:
      if (!options.explicit_beta || !(*options.explicit_beta > 0)) {
        throw std::invalid_argument("explicit beta mode needs a positive beta");
      }
      beta = *options.explicit_beta;
      break;
  }

  const double r = static_cast<double>(pattern.r());
  const double h = static_cast<double>(pattern.h());
  std::uint64_t n_target;
  if (options.n_target) {
    n_target = *options.n_target;
  } else {
    const double raw = options.delta_prime * std::pow(k, (h - r) / (r - alpha)) * e_g;
    n_target = static_cast<std::uint64_t>(std::max(1.0, std::floor(raw)));
  }
  const double C = options.C ? *options.C : 4.0 / options.delta_prime;

  FamilyBuild result{CopyFamily{host, pattern, {}, {}, {C, beta, n_target, options.cutoff}}, {}};
  CopyFamily& family = result.family;
  BuildReport& report = result.report;
  const std::size_t ell = pattern.ell();
  const std::size_t cutoff = family.cutoff_size();

  std::vector<double> threshold(cutoff + 1, 0.0);
  for (std::size_t s = 1; s <= cutoff; ++s) {
    threshold[s] = saturation_threshold(C, beta, static_cast<double>(n_target), e_g, s);
  }

  ForbiddenIndex saturated(host.num_edges());
  CopyEnumerator copies(host, pattern, &saturated);
  while (family.members.size() < n_target) {
    auto next = copies.next();
    if (!next) break;
    ++report.copies_examined;
    if (saturated.any_subset_of(next->edges)) continue;
    const EdgeSet edges = next->edges;
    family.add(std::move(*next));
    for_each_subset(edges, cutoff, [&](const EdgeSet& s) {
      if (static_cast<double>(family.degrees.degree(s)) >= threshold[s.size()]) saturated.insert(s);
    });
  }

  report.iterations = family.members.size();
  report.reached_target = family.members.size() >= n_target;
  report.shortfall = report.reached_target ? 0 : n_target - family.members.size();
  report.k = k;
  report.delta_prime = options.delta_prime;
  for (std::size_t i = 1; i <= cutoff; ++i) report.saturated_per_size.push_back(saturated.count_of_size(i));
  for (std::size_t i = 1; i + 1 <= ell; ++i) {
    const double bound = std::pow(2.0, static_cast<double>(ell)) / C *
                         std::pow(1.0 / beta, static_cast<double>(i) - 1.0) * e_g;
    report.saturated_bound.push_back(bound);
    report.saturated_bound_ok.push_back(static_cast<double>(saturated.count_of_size(i)) <= bound);
  }
  report.threshold_at_cutoff = threshold[cutoff];
  report.threshold_at_cutoff_ge_one = threshold[cutoff] >= 1.0;
  report.threshold_at_cutoff_ge_two = threshold[cutoff] >= 2.0;
  report.alpha_above_density_threshold = exponents.alpha_above_density_threshold;
  return result;
}

Certificate verify_certificate(const CopyFamily& family) {
  Certificate cert;
  const std::size_t ell = family.pattern.ell();
  const std::size_t cutoff = family.cutoff_size();
  cert.per_size_max_degree.assign(ell, 0);
  cert.per_size_max_ratio.assign(ell, 0.0);

  cert.members_valid = true;
  {
    std::vector<EdgeSet> sorted;
    for (const auto& m : family.members) {
      sorted.push_back(m.edges);
      if (!is_copy_of(family.host, family.pattern, m.edges)) cert.members_valid = false;
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) cert.members_valid = false;
  }

  std::map<EdgeSet, std::uint64_t> recomputed;  // ordered: ties resolve to the smallest S
  for (const auto& m : family.members) {
    if (m.edges.size() > kMaxMemberSize) {
      cert.members_valid = false;
      continue;
    }
    for_each_subset(m.edges, m.edges.size(), [&](const EdgeSet& s) { ++recomputed[s]; });
  }
  cert.index_consistent = recomputed.size() == family.degrees.size();
  if (cert.index_consistent) {
    for (const auto& [s, d] : recomputed) {
      if (family.degrees.degree(s) != d) {
        cert.index_consistent = false;
        break;
      }
    }
  }

  const double size_f = static_cast<double>(family.members.size());
  const double e_g = static_cast<double>(family.host.num_edges());
  const auto& p = family.params;
  bool have_worst = false;
  for (const auto& [s, d] : recomputed) {
    const std::size_t size = s.size();
    if (size == 0 || size > ell) continue;
    const double bound = p.C * std::pow(p.beta, static_cast<double>(size) - 1.0) * size_f / e_g;
    const double ratio = static_cast<double>(d) / bound;
    cert.per_size_max_degree[size - 1] = std::max(cert.per_size_max_degree[size - 1], d);
    cert.per_size_max_ratio[size - 1] = std::max(cert.per_size_max_ratio[size - 1], ratio);
    if (size > cutoff) continue;
    const bool better = !have_worst || ratio > cert.worst_ratio ||
                        (ratio == cert.worst_ratio && size < cert.worst_s.size());
    if (better) {
      cert.worst_ratio = ratio;
      cert.worst_s = s;
      have_worst = true;
    }
  }
  if (!cert.members_valid || !cert.index_consistent) {
    cert.worst_ratio = std::numeric_limits<double>::infinity();
  }
  cert.satisfied = cert.worst_ratio <= 1.0;
  return cert;
}

ReplayAudit replay_audit(const CopyFamily& family) {
  ReplayAudit audit;
  const auto& p = family.params;
  const std::size_t cutoff = family.cutoff_size();
  const double e_g = static_cast<double>(family.host.num_edges());
  std::vector<double> threshold(cutoff + 1, 0.0);
  for (std::size_t s = 1; s <= cutoff; ++s) {
    threshold[s] = saturation_threshold(p.C, p.beta, static_cast<double>(p.n_target), e_g, s);
  }
  std::unordered_map<EdgeSet, std::uint64_t, EdgeSetHash> degree;
  for (std::size_t t = 0; t < family.members.size(); ++t) {
    const EdgeSet& member = family.members[t].edges;
    bool ok = true;
    for_each_subset(member, cutoff, [&](const EdgeSet& s) {
      std::uint64_t& d = degree[s];
      if (static_cast<double>(d) >= threshold[s.size()]) {
        audit.good_copy_soundness = false;
        ok = false;
      }
      ++d;
      if (static_cast<double>(d) > threshold[s.size()] + 1.0) {
        audit.monotone_saturation = false;
        ok = false;
      }
      if (static_cast<double>(d) > 2.0 * threshold[s.size()]) {
        audit.final_bound_holds = false;
        ok = false;
      }
    });
    if (!ok && !audit.first_violation) audit.first_violation = t;
  }
  return audit;
}

Rational codegree_function(std::span<const EdgeSet> members, const Rational& tau) {
  if (members.empty()) throw std::invalid_argument("codegree_function: empty family");
  if (tau <= 0) throw std::invalid_argument("codegree_function: tau must be positive");
  const std::size_t ell = members.front().size();
  for (const auto& m : members) {
    if (m.size() != ell) throw std::invalid_argument("codegree_function: members differ in size");
  }
  DegreeIndex index;
  for (const auto& m : members) index.add_member(m);

  // max_degree[j][v] for subsets of size j >= 2
  std::vector<std::unordered_map<EdgeIndex, std::uint64_t>> max_degree(ell + 1);
  for (const auto& [s, d] : index.entries()) {
    if (s.size() < 2) continue;
    auto& row = max_degree[s.size()];
    for (EdgeIndex v : s) {
      auto& slot = row[v];
      slot = std::max(slot, d);
    }
  }
  Rational total = 0;
  Rational scale = 1;  // tau^(1-j)
  for (std::size_t j = 2; j <= ell; ++j) {
    scale /= tau;
    std::uint64_t sum = 0;
    for (const auto& [v, d] : max_degree[j]) sum += d;
    total += scale * Rational(sum);
  }
  return total / Rational(members.size());
}

}  // namespace balsat
