#include "asearch/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace asearch {

Value Configuration::at(std::size_t i) const {
  if (i >= values_.size()) {
    throw std::out_of_range("Configuration: index " + std::to_string(i) + " out of range");
  }
  return values_[i];
}

void Configuration::swap(std::size_t i, std::size_t j) {
  if (i >= values_.size() || j >= values_.size()) {
    throw std::out_of_range("Configuration::swap: index out of range (" + std::to_string(i) +
                            ", " + std::to_string(j) + ") for size " +
                            std::to_string(values_.size()));
  }
  std::swap(values_[i], values_[j]);
}

Configuration random_permutation(std::span<const Value> domain, RandomSource& rng) {
  if (domain.empty()) throw std::invalid_argument("random_permutation: size must be positive");
  std::vector<Value> values(domain.begin(), domain.end());
  for (std::size_t i = values.size() - 1; i > 0; --i) {
    std::swap(values[i], values[rng.between(0, i)]);
  }
  return Configuration(std::move(values));
}

Configuration random_permutation(std::size_t n, RandomSource& rng) {
  if (n == 0) throw std::invalid_argument("random_permutation: size must be positive");
  std::vector<Value> identity(n);
  std::iota(identity.begin(), identity.end(), Value{0});
  return random_permutation(std::span<const Value>(identity), rng);
}

bool is_permutation_of(std::span<const Value> values, std::span<const Value> domain) {
  if (values.size() != domain.size()) return false;
  std::vector<Value> a(values.begin(), values.end());
  std::vector<Value> b(domain.begin(), domain.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace asearch
