#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "asearch/configuration.hpp"
#include "asearch/models.hpp"

namespace asearch {

namespace {

// Distance k sits between positions k and k+1.
Value distance_at(std::span<const Value> c, std::size_t k) { return std::abs(c[k + 1] - c[k]); }

std::vector<int> distance_counts(std::span<const Value> c) {
  std::vector<int> counts(c.size() + 1, 0);
  for (std::size_t k = 0; k + 1 < c.size(); ++k) ++counts[distance_at(c, k)];
  return counts;
}

Cost missing_distances(const std::vector<int>& counts, std::size_t n) {
  Cost missing = 0;
  for (std::size_t d = 1; d < n; ++d) {
    if (counts[d] == 0) missing += AllIntervalModel::distance_weight(static_cast<Value>(d));
  }
  return missing;
}

// Shared by the evaluator and the stateless path: scores position i by the
// best exchange it takes part in.
template <typename SwapCost>
Cost exchange_gain(std::size_t n, std::size_t i, Cost current, SwapCost&& swap_cost) {
  if (current == 0) return 0;
  Cost best = current;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i) best = std::min(best, swap_cost(j));
  }
  return current - best + 1;
}

class AllIntervalEvaluator final : public Evaluator {
 public:
  explicit AllIntervalEvaluator(const AllIntervalModel& model) : model_(model) {}

  Cost reset(std::span<const Value> c) override {
    cost_ = model_.cost_of_solution(c);
    counts_ = distance_counts(c);
    return cost_;
  }

  Cost cost_on_variable(std::span<const Value> c, std::size_t i) override {
    return exchange_gain(c.size(), i, cost_,
                         [&](std::size_t j) { return cost_if_swap(c, cost_, i, j); });
  }

  Cost cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                    std::size_t j) override {
    if (i == j) return current;
    const Cost result = apply(c, current, i, j, /*exchanged=*/false);
    // Undo by exchanging back: the new distances become the old ones.
    undo(c, i, j);
    return result;
  }

  void swapped(std::span<const Value> c, std::size_t i, std::size_t j) override {
    if (i == j) return;
    cost_ = apply(c, cost_, i, j, /*exchanged=*/true);
  }

 private:
  // Distances touched by exchanging i and j, deduplicated.
  std::size_t touched(std::size_t n, std::size_t i, std::size_t j,
                      std::array<std::size_t, 4>& out) const {
    std::size_t count = 0;
    auto push = [&](std::size_t k) {
      if (k + 1 >= n) return;
      for (std::size_t t = 0; t < count; ++t) {
        if (out[t] == k) return;
      }
      out[count++] = k;
    };
    if (i > 0) push(i - 1);
    push(i);
    if (j > 0) push(j - 1);
    push(j);
    return count;
  }

  // Moves the counts from the distances of one arrangement to those of the
  // other and returns the updated cost. `exchanged` tells whether c already
  // reflects the exchange.
  Cost apply(std::span<const Value> c, Cost cost, std::size_t i, std::size_t j, bool exchanged) {
    auto before = [&](std::size_t p) {
      if (!exchanged) return c[p];
      return p == i ? c[j] : p == j ? c[i] : c[p];
    };
    auto after = [&](std::size_t p) {
      if (exchanged) return c[p];
      return p == i ? c[j] : p == j ? c[i] : c[p];
    };
    std::array<std::size_t, 4> ks{};
    const std::size_t count = touched(c.size(), i, j, ks);
    for (std::size_t t = 0; t < count; ++t) {
      const auto d = static_cast<std::size_t>(std::abs(before(ks[t] + 1) - before(ks[t])));
      if (--counts_[d] == 0) cost += AllIntervalModel::distance_weight(static_cast<Value>(d));
    }
    for (std::size_t t = 0; t < count; ++t) {
      const auto d = static_cast<std::size_t>(std::abs(after(ks[t] + 1) - after(ks[t])));
      if (counts_[d]++ == 0) cost -= AllIntervalModel::distance_weight(static_cast<Value>(d));
    }
    return cost;
  }

  void undo(std::span<const Value> c, std::size_t i, std::size_t j) {
    std::array<std::size_t, 4> ks{};
    const std::size_t count = touched(c.size(), i, j, ks);
    auto exchanged = [&](std::size_t p) { return p == i ? c[j] : p == j ? c[i] : c[p]; };
    for (std::size_t t = 0; t < count; ++t) {
      --counts_[static_cast<std::size_t>(std::abs(exchanged(ks[t] + 1) - exchanged(ks[t])))];
      ++counts_[distance_at(c, ks[t])];
    }
  }

  const AllIntervalModel& model_;
  std::vector<int> counts_;
  Cost cost_ = 0;
};

}  // namespace

AllIntervalModel::AllIntervalModel(int length) : length_(length) {
  if (length < 1 || length > max_length) {
    throw std::invalid_argument("all-interval: length must lie in 1.." +
                                std::to_string(max_length) + ", got " + std::to_string(length));
  }
}

std::vector<Value> AllIntervalModel::base_domain() const {
  std::vector<Value> domain(size());
  std::iota(domain.begin(), domain.end(), Value{0});
  return domain;
}

Cost AllIntervalModel::cost_of_solution(std::span<const Value> c) const {
  check_domain(c);
  return missing_distances(distance_counts(c), c.size());
}

Cost AllIntervalModel::cost_on_variable(std::span<const Value> c, std::size_t i) const {
  check_index(i, i);
  const Cost current = cost_of_solution(c);
  return exchange_gain(c.size(), i, current,
                       [&](std::size_t j) { return cost_if_swap(c, current, i, j); });
}

bool AllIntervalModel::verify(std::span<const Value> c) const {
  if (c.size() != size() || !is_permutation_of(c, base_domain())) return false;
  std::set<Value> intervals;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) intervals.insert(std::abs(c[k] - c[k + 1]));
  // N-1 distinct intervals drawn from 1..N-1 form exactly that set.
  if (intervals.size() != c.size() - 1) return false;
  return intervals.empty() || (*intervals.begin() == 1 &&
                               *intervals.rbegin() == static_cast<Value>(c.size()) - 1);
}

std::unique_ptr<ProblemModel> AllIntervalModel::clone() const {
  return std::make_unique<AllIntervalModel>(*this);
}

std::unique_ptr<Evaluator> AllIntervalModel::make_evaluator() const {
  return std::make_unique<AllIntervalEvaluator>(*this);
}

}  // namespace asearch
