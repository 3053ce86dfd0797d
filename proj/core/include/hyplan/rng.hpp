#pragma once

#include <cstdint>

namespace hyplan {

/// Counter-based random stream.
///
/// Draw k (k = 1, 2, ...) is SplitMix64 applied to seed + k * 0x9E3779B97F4A7C15,
/// so the sequence depends only on the seed and is identical on every
/// platform. Real draws use the top 53 bits of a word.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform01();

  /// Uniform on [lo, hi); returns exactly lo when lo == hi.
  double uniform(double lo, double hi);

  /// Uniform on (0, hi].
  double uniform_positive(double hi);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace hyplan
