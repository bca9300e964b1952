#include "asearch/model.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "asearch/configuration.hpp"

namespace asearch {

Cost ProblemModel::cost_if_swap(std::span<const Value> c, Cost /*current*/, std::size_t i,
                                std::size_t j) const {
  check_size(c);
  check_index(i, j);
  std::vector<Value> swapped(c.begin(), c.end());
  std::swap(swapped[i], swapped[j]);
  return cost_of_solution(swapped);
}

std::unique_ptr<Evaluator> ProblemModel::make_evaluator() const {
  return std::make_unique<ForwardingEvaluator>(*this);
}

void ProblemModel::check_size(std::span<const Value> c) const {
  if (c.size() != size()) {
    throw std::invalid_argument(std::string(name()) + ": configuration has " +
                                std::to_string(c.size()) + " values, expected " +
                                std::to_string(size()));
  }
}

void ProblemModel::check_domain(std::span<const Value> c) const {
  check_size(c);
  const std::vector<Value> domain = base_domain();
  bool ok = true;
  if (!domain.empty() &&
      static_cast<std::size_t>(domain.back() - domain.front()) + 1 == domain.size()) {
    std::vector<char> seen(domain.size(), 0);
    for (Value v : c) {
      if (v < domain.front() || v > domain.back() || seen[v - domain.front()]) {
        ok = false;
        break;
      }
      seen[v - domain.front()] = 1;
    }
  } else {
    ok = is_permutation_of(c, domain);
  }
  if (!ok) {
    throw std::invalid_argument(std::string(name()) +
                                ": configuration is not a permutation of the base domain");
  }
}

void ProblemModel::check_index(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) {
    throw std::out_of_range(std::string(name()) + ": variable index out of range");
  }
}

}  // namespace asearch
