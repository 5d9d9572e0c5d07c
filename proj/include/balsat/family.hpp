#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "balsat/enumerate.hpp"
#include "balsat/metrics.hpp"
#include "balsat/rational.hpp"

namespace balsat {

/// Largest subset size whose degree is controlled: l - 1 (the saturation range of the
/// greedy construction) or l (the range of the final degree bounds).
enum class Cutoff { EllMinusOne, Ell };

enum class BetaMode { Thm1, Thm2, Explicit };

const char* to_string(Cutoff c);
const char* to_string(BetaMode m);

struct FamilyParams {
  double C = 1.0;
  double beta = 1.0;
  std::uint64_t n_target = 0;
  Cutoff cutoff = Cutoff::EllMinusOne;
};

/// d_F(S) for every nonempty S contained in at least one member.
class DegreeIndex {
 public:
  /// Adds one to the degree of every nonempty subset of `member`.
  void add_member(const EdgeSet& member);
  std::uint64_t degree(const EdgeSet& s) const;
  std::size_t size() const { return degrees_.size(); }
  const std::unordered_map<EdgeSet, std::uint64_t, EdgeSetHash>& entries() const { return degrees_; }

  friend bool operator==(const DegreeIndex& a, const DegreeIndex& b) { return a.degrees_ == b.degrees_; }

 private:
  std::unordered_map<EdgeSet, std::uint64_t, EdgeSetHash> degrees_;
};

struct CopyFamily {
  Hypergraph host;
  Pattern pattern;
  std::vector<Copy> members;  // insertion order
  DegreeIndex degrees;
  FamilyParams params;

  std::size_t cutoff_size() const {
    return params.cutoff == Cutoff::Ell ? pattern.ell() : pattern.ell() - 1;
  }
  void add(Copy c) {
    degrees.add_member(c.edges);
    members.push_back(std::move(c));
  }
};

/// C * beta^(s-1) * N / (2 e_G): a set of size s is saturated once its degree reaches this.
double saturation_threshold(double C, double beta, double n_target, double e_g, std::size_t s);

struct BuildOptions {
  Rational alpha{3, 2};
  std::optional<double> k_override;
  std::optional<std::uint64_t> n_target;  // default: floor(delta' k^((h-r)/(r-alpha)) e(G)), >= 1
  double delta_prime = 0.25;
  std::optional<double> C;                // default: 4 / delta'
  BetaMode beta_mode = BetaMode::Thm2;
  std::optional<double> explicit_beta;
  Cutoff cutoff = Cutoff::EllMinusOne;
};

struct BuildReport {
  bool reached_target = false;
  std::uint64_t shortfall = 0;           // n_target - |F| when the search ran dry
  std::uint64_t copies_examined = 0;     // copies drawn from the enumerator
  std::uint64_t iterations = 0;          // members added
  double k = 0;
  double delta_prime = 0;
  std::vector<std::uint64_t> saturated_per_size;  // index i-1 for sizes 1..cutoff
  std::vector<double> saturated_bound;            // (2^l / C)(1/beta)^(i-1) e(G), sizes 1..l-1
  std::vector<bool> saturated_bound_ok;
  double threshold_at_cutoff = 0;
  bool threshold_at_cutoff_ge_one = false;  // premise of the "+1" step
  bool threshold_at_cutoff_ge_two = false;  // the stronger inequality used asymptotically
  bool alpha_above_density_threshold = false;
};

struct FamilyBuild {
  CopyFamily family;
  BuildReport report;
};

/// Greedy saturation: walk the copies in canonical order and add each one that
/// contains no saturated set of size 1..cutoff, updating degrees and the saturated
/// registry, until n_target members or the copies run out (then `shortfall` > 0).
///
/// Because saturated sets stay saturated, one pass in canonical order picks exactly
/// the copy a restart-from-scratch search would pick at each step.
FamilyBuild build_balanced_family(const Hypergraph& host, const Pattern& pattern,
                                  const BuildOptions& options);

struct Certificate {
  bool satisfied = false;
  bool members_valid = false;   // distinct, and each is a copy of the pattern in the host
  bool index_consistent = false;
  EdgeSet worst_s;
  double worst_ratio = 0;
  std::vector<std::uint64_t> per_size_max_degree;  // sizes 1..l
  std::vector<double> per_size_max_ratio;          // sizes 1..l
};

/// Recomputes every subset degree from the members (independently of the stored
/// index) and checks d_F(S) <= C beta^(|S|-1) |F| / e(G) for 1 <= |S| <= cutoff.
Certificate verify_certificate(const CopyFamily& family);

struct ReplayAudit {
  bool good_copy_soundness = true;  // no member contained a saturated set when inserted
  bool monotone_saturation = true;  // every degree <= threshold + 1 (sizes 1..cutoff)
  bool final_bound_holds = true;    // every degree <= C beta^(|S|-1) N / e(G)
  std::optional<std::size_t> first_violation;
};

/// Replays the insertion order with fresh bookkeeping and audits the greedy invariants.
ReplayAudit replay_audit(const CopyFamily& family);

/// Co-degree function of the family viewed as a uniform hypergraph on host edges:
///   (1/|F|) sum_{j=2..l} tau^(1-j) sum_v max{ d_F(S) : v in S, |S| = j }.
/// Members must be distinct sets of equal size; throws on an empty family or tau <= 0.
Rational codegree_function(std::span<const EdgeSet> members, const Rational& tau);

}  // namespace balsat
