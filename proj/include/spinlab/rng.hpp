#pragma once

#include <cstdint>

namespace spinlab {

/// Counter-based random source.
///
/// Every draw is a pure function of (key, stream, index): the 64-bit key is
/// derived from the user seed, `split` derives an independent child key for a
/// named sub-stream, and `bits(stream, index)` hashes the triple with two
/// rounds of the SplitMix64 finaliser. No state is mutated, so trials can be
/// evaluated in any order or in parallel with bit-identical results.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x5851f42d4c957f2dULL)) {}

  std::uint64_t key() const { return key_; }

  /// Child generator whose draws are independent of this one's.
  CounterRng split(std::uint64_t stream) const;

  std::uint64_t bits(std::uint64_t stream, std::uint64_t index) const;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform(std::uint64_t stream, std::uint64_t index) const;

  bool bernoulli(double p, std::uint64_t stream, std::uint64_t index) const {
    return uniform(stream, index) < p;
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  struct FromKey {};
  constexpr CounterRng(FromKey, std::uint64_t key) : key_(key) {}

  std::uint64_t key_;
};

}  // namespace spinlab
