#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace balsat {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123 constants).
///
/// The stream is a pure function of (seed, counter); every stochastic
/// operation in the library takes an explicit seed and draws through this
/// type so results are bit-identical across platforms and standard libraries.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();
  std::uint64_t next_u64();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// One application of the 10-round bijection; exposed for known-answer tests.
  static Block encrypt(Block counter, Key key);

 private:
  void refill();

  Key key_{};
  Block counter_{};
  Block buffer_{};
  unsigned used_ = 4;
};

/// Derives an independent 64-bit seed for sub-stream `index` of `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace balsat
