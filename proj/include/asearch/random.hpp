#pragma once

#include <cstdint>
#include <random>

namespace asearch {

/// Seeded pseudorandom stream. Identical seeds give identical draw sequences
/// on the same standard library build.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform integer in [0, bound). `bound` must be at least 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

  std::uint64_t next() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64 output function. A bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of stream `stream_id` under `base`. Injective in `stream_id` for a
/// fixed base and stable across runs and platforms.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream_id) noexcept;

}  // namespace asearch
