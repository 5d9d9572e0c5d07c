#include "balsat/metrics.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace balsat {

DensityReport compute_densities(const Hypergraph& h) {
  const std::size_t v = h.num_vertices();
  const std::size_t r = h.uniformity();
  if (v <= r) {
    throw std::invalid_argument("compute_densities requires v(H) >= r + 1 (v = " +
                                std::to_string(v) + ", r = " + std::to_string(r) + ")");
  }
  if (v > 24) throw std::invalid_argument("compute_densities: pattern too large (v > 24)");

  std::vector<std::uint32_t> edge_masks;
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    std::uint32_t m = 0;
    for (Vertex x : h.edge(e)) m |= 1U << x;
    edge_masks.push_back(m);
  }
  const std::uint32_t full = v == 32 ? ~0U : (1U << v) - 1;

  std::optional<Rational> best, best_proper;
  std::uint32_t best_mask = 0, best_proper_mask = 0;
  std::size_t best_edges = 0, best_proper_edges = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= r) continue;
    std::size_t edges = 0;
    for (auto em : edge_masks) edges += (em & ~mask) == 0;
    const Rational ratio(static_cast<long long>(edges) - 1, static_cast<long long>(size - r));
    if (!best || ratio > *best) {
      best = ratio;
      best_mask = mask;
      best_edges = edges;
    }
    // On the full vertex set a proper subgraph keeps at most e(H) - 1 edges.
    const std::size_t proper_edges = mask == full ? edges - 1 : edges;
    const Rational proper_ratio(static_cast<long long>(proper_edges) - 1,
                                static_cast<long long>(size - r));
    if (!best_proper || proper_ratio > *best_proper) {
      best_proper = proper_ratio;
      best_proper_mask = mask;
      best_proper_edges = proper_edges;
    }
  }

  const auto to_vertices = [](std::uint32_t mask) {
    std::vector<Vertex> out;
    for (Vertex x = 0; mask != 0; ++x, mask >>= 1) {
      if (mask & 1U) out.push_back(x);
    }
    return out;
  };

  DensityReport report;
  report.m_r = *best;
  report.m_star_r = *best_proper;
  report.strictly_balanced = report.m_r > report.m_star_r;
  report.witness_m_r = to_vertices(best_mask);
  report.witness_m_r_edges = best_edges;
  report.witness_m_star = to_vertices(best_proper_mask);
  report.witness_m_star_edges = best_proper_edges;
  return report;
}

ExponentSet compute_exponents(const DensityReport& report, const Pattern& pattern,
                              const Rational& alpha, std::optional<double> k,
                              std::optional<std::uint64_t> n) {
  const Rational r(static_cast<long long>(pattern.r()));
  if (alpha >= r) throw std::invalid_argument("alpha must be smaller than r");
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (pattern.ell() < 2) throw std::invalid_argument("pattern needs at least two edges");

  ExponentSet out;
  out.alpha = alpha;
  out.lambda = 1 / (report.m_r * (r - alpha));
  if (report.m_star_r > 0) out.lambda_star = 1 / (report.m_star_r * (r - alpha));
  if (pattern.r() == 2) {
    const Rational ell(static_cast<long long>(pattern.ell()));
    const Rational h(static_cast<long long>(pattern.h()));
    out.phi = (alpha * ell - alpha + h - 2 * ell) / (ell - 1);
  }
  out.alpha_above_density_threshold = alpha > r - 1 / report.m_r;
  out.lambda_gt_one = out.lambda > 1;
  out.k = k;
  out.n = n;
  if (k) {
    if (!(*k > 0)) throw std::invalid_argument("k must be positive");
    out.beta_thm1 = std::pow(*k, -to_double(out.lambda));
    if (n && out.phi && out.lambda_star) {
      const double a = std::pow(static_cast<double>(*n), -to_double(*out.phi)) / *k;
      const double b = std::pow(*k, -to_double(*out.lambda_star));
      out.beta_thm2 = std::max(a, b);
    }
  }
  return out;
}

const char* to_string(BoundVariant v) { return v == BoundVariant::General ? "general" : "es_good"; }
const char* to_string(BoundBranch b) { return b == BoundBranch::Low ? "low" : "high"; }

BoundShape bound_shape(const DensityReport& report, const Pattern& pattern, const Rational& alpha,
                       BoundVariant variant) {
  if (pattern.r() != 2) throw std::invalid_argument("random-Turan bounds are for graphs (r = 2)");
  const ExponentSet ex = compute_exponents(report, pattern, alpha);
  BoundShape s;
  s.variant = variant;
  if (variant == BoundVariant::General) {
    s.threshold_n_exponent = -1 / report.m_r;
    s.threshold_log_power = 0;
    s.low_n_exponent = 2 - 1 / report.m_r;
    s.low_log_power = 0;
    s.high_p_exponent = 1 - 1 / ex.lambda;
    s.high_n_exponent = alpha;
    return s;
  }
  if (!ex.lambda_star || *ex.lambda_star <= 1) {
    throw std::invalid_argument("es_good bound needs lambda* > 1");
  }
  const Rational& ls = *ex.lambda_star;
  const Rational& phi = *ex.phi;
  s.threshold_n_exponent = -phi * ls / (ls - 1);
  s.threshold_log_power = 2 * ls / (ls - 1);
  s.low_n_exponent = alpha - phi;
  s.low_log_power = 2;
  s.high_p_exponent = 1 - 1 / ls;
  s.high_n_exponent = alpha;
  return s;
}

BoundValue evaluate_bound(const BoundShape& shape, double n, double p, double constant) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (!(n >= 2.0)) throw std::invalid_argument("n must be at least 2");
  const double log_n = std::log(n);
  BoundValue out;
  out.threshold = std::pow(n, to_double(shape.threshold_n_exponent)) *
                  std::pow(log_n, to_double(shape.threshold_log_power));
  if (p <= out.threshold) {
    out.branch = BoundBranch::Low;
    out.value = constant * std::pow(n, to_double(shape.low_n_exponent)) *
                std::pow(log_n, to_double(shape.low_log_power));
  } else {
    out.branch = BoundBranch::High;
    out.value = constant * std::pow(p, to_double(shape.high_p_exponent)) *
                std::pow(n, to_double(shape.high_n_exponent));
  }
  return out;
}

}  // namespace balsat
