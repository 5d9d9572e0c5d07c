#include "balsat/binomial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace balsat {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BinomRatioBounds binom_ratio_bounds(std::uint64_t n, std::uint64_t w, std::uint64_t h) {
  if (!(n >= w && w >= h)) {
    throw std::invalid_argument("binom_ratio_bounds requires n >= w >= h (got n=" +
                                std::to_string(n) + ", w=" + std::to_string(w) +
                                ", h=" + std::to_string(h) + ")");
  }
  if (n == 0) throw std::invalid_argument("binom_ratio_bounds requires n >= 1");

  BinomRatioBounds out;
  out.lower_applies = w >= h * h;
  if (n <= kExactBinomLimit) {
    out.exact = true;
    out.ratio = Rational(binomial(n - h, w - h), binomial(n, w));
    out.upper = pow(Rational(static_cast<long long>(w), static_cast<long long>(n)), static_cast<int>(h));
    out.lower = out.upper / 2;
    out.upper_holds = out.ratio <= out.upper;
    out.lower_holds = !out.lower_applies || out.ratio >= out.lower;
    out.ratio_value = to_long_double(out.ratio);
    out.upper_value = to_long_double(out.upper);
    out.lower_value = to_long_double(out.lower);
    return out;
  }
  // ratio = prod_{i<h} (w-i)/(n-i)
  long double ratio = 1.0L;
  for (std::uint64_t i = 0; i < h; ++i) {
    ratio *= static_cast<long double>(w - i) / static_cast<long double>(n - i);
  }
  out.ratio_value = ratio;
  out.upper_value = std::pow(static_cast<long double>(w) / static_cast<long double>(n),
                             static_cast<long double>(h));
  out.lower_value = out.upper_value / 2;
  out.upper_holds = out.ratio_value <= out.upper_value;
  out.lower_holds = !out.lower_applies || out.ratio_value >= out.lower_value;
  return out;
}

}  // namespace balsat
