#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "asearch/random.hpp"
#include "asearch/types.hpp"

namespace asearch {

/// Assignment of a permutation problem: values()[i] is the value held by
/// variable i. The length is fixed at construction and the only mutation is
/// an exchange of two positions, so a permutation stays a permutation.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Value> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Value> values() const noexcept { return values_; }
  Value operator[](std::size_t i) const noexcept { return values_[i]; }
  Value at(std::size_t i) const;

  /// Exchanges positions i and j. Throws std::out_of_range on a bad index.
  void swap(std::size_t i, std::size_t j);

  operator std::span<const Value>() const noexcept { return values_; }  // NOLINT

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Value> values_;
};

/// Uniform permutation of 0..n-1 by Fisher-Yates, consuming exactly n-1
/// bounded draws. Throws std::invalid_argument when n is 0.
Configuration random_permutation(std::size_t n, RandomSource& rng);

/// Uniform permutation of the given domain (same draw pattern as above).
Configuration random_permutation(std::span<const Value> domain, RandomSource& rng);

/// True when `values` is a rearrangement of `domain`.
bool is_permutation_of(std::span<const Value> values, std::span<const Value> domain);

}  // namespace asearch
