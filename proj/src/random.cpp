#include "asearch/random.hpp"

#include <stdexcept>

namespace asearch {

std::uint64_t RandomSource::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RandomSource::below: bound must be positive");
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

std::uint64_t RandomSource::between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("RandomSource::between: empty range");
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream_id) noexcept {
  // Odd gamma: (id + 1) * gamma is injective mod 2^64, and mix64 is a bijection.
  constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  return mix64(base + (stream_id + 1) * kGamma);
}

}  // namespace asearch
