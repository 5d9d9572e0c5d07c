#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "balsat/pattern.hpp"
#include "balsat/rational.hpp"

namespace balsat {

/// r-density m_r (max of (e(F)-1)/(v(F)-r) over subgraphs F with v(F) > r) and the
/// proper r-density m*_r (same maximum over proper subgraphs F != H).
struct DensityReport {
  Rational m_r;
  Rational m_star_r;
  bool strictly_balanced = false;
  std::vector<Vertex> witness_m_r;     // vertex set of a maximizing subgraph
  std::size_t witness_m_r_edges = 0;   // its edge count
  std::vector<Vertex> witness_m_star;
  std::size_t witness_m_star_edges = 0;
};

/// Maximizes over vertex subsets with their full induced edge sets; for the proper
/// density the full vertex set contributes with one edge removed. Requires v(H) >= r + 1.
DensityReport compute_densities(const Hypergraph& h);
inline DensityReport compute_densities(const Pattern& p) { return compute_densities(p.graph()); }

struct ExponentSet {
  Rational alpha;
  Rational lambda;                      // 1 / (m_r (r - alpha))
  std::optional<Rational> lambda_star;  // 1 / (m*_r (r - alpha)); absent when m*_r = 0
  std::optional<Rational> phi;          // (alpha*l - alpha + h - 2l) / (l - 1); graphs only
  std::optional<double> k;
  std::optional<std::uint64_t> n;
  std::optional<double> beta_thm1;      // k^-lambda
  std::optional<double> beta_thm2;      // max{k^-1 n^-phi, k^-lambda*}; graphs only
  bool alpha_above_density_threshold = false;  // alpha > r - 1/m_r
  bool lambda_gt_one = false;
};

/// Throws std::invalid_argument when alpha >= r.
ExponentSet compute_exponents(const DensityReport& report, const Pattern& pattern,
                              const Rational& alpha, std::optional<double> k = std::nullopt,
                              std::optional<std::uint64_t> n = std::nullopt);

enum class BoundVariant { General, EsGood };
enum class BoundBranch { Low, High };

const char* to_string(BoundVariant v);
const char* to_string(BoundBranch b);

/// Exponents of the piecewise random-Turan upper bound
///   low  branch:  C * n^low_n * (log n)^low_log        if p <= n^thr_n * (log n)^thr_log
///   high branch:  C * p^high_p * n^high_n              otherwise
struct BoundShape {
  BoundVariant variant = BoundVariant::General;
  Rational threshold_n_exponent;
  Rational threshold_log_power;
  Rational low_n_exponent;
  Rational low_log_power;
  Rational high_p_exponent;
  Rational high_n_exponent;
};

/// Graphs only. General variant uses m_2 and lambda; EsGood uses phi and lambda*
/// and requires lambda* > 1.
BoundShape bound_shape(const DensityReport& report, const Pattern& pattern, const Rational& alpha,
                       BoundVariant variant);

struct BoundValue {
  double value = 0;
  double threshold = 0;
  BoundBranch branch = BoundBranch::High;
};

/// Natural logarithm; throws when p is outside [0, 1] or n < 2.
BoundValue evaluate_bound(const BoundShape& shape, double n, double p, double constant = 1.0);

inline BoundValue bound_formula_random_turan(const DensityReport& report, const Pattern& pattern,
                                             const Rational& alpha, double n, double p,
                                             BoundVariant variant, double constant = 1.0) {
  return evaluate_bound(bound_shape(report, pattern, alpha, variant), n, p, constant);
}

}  // namespace balsat
