#pragma once

#include <cstdint>

#include "balsat/rational.hpp"

namespace balsat {

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// C(n-h, w-h) / C(n, w) against the bounds (w/n)^h and, when w >= h^2, (1/2)(w/n)^h.
struct BinomRatioBounds {
  bool exact = false;          // rationals below are populated
  Rational ratio, upper, lower;
  long double ratio_value = 0, upper_value = 0, lower_value = 0;
  bool lower_applies = false;  // w >= h^2
  bool upper_holds = false;    // ratio <= upper
  bool lower_holds = false;    // ratio >= lower, or vacuous when !lower_applies
};

inline constexpr std::uint64_t kExactBinomLimit = 64;

/// Requires n >= w >= h >= 0. Exact rationals for n <= kExactBinomLimit,
/// long double products beyond.
BinomRatioBounds binom_ratio_bounds(std::uint64_t n, std::uint64_t w, std::uint64_t h);

}  // namespace balsat
