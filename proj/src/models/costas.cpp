#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "asearch/configuration.hpp"
#include "asearch/models.hpp"

namespace asearch {

namespace {

// Occurrence counts of every difference value, one row per distance d.
// Row d covers values -(N-1)..N-1 stored at offset N-1.
class DifferenceTriangle {
 public:
  explicit DifferenceTriangle(std::size_t n)
      : n_(n), width_(n == 0 ? 0 : 2 * n - 1), counts_(n * width_, 0) {}

  // Rebuilds from c and returns the surplus-entry cost.
  Cost rebuild(std::span<const Value> c) {
    std::fill(counts_.begin(), counts_.end(), 0);
    Cost cost = 0;
    for (std::size_t d = 1; d < n_; ++d) {
      for (std::size_t k = 0; k + d < n_; ++k) cost += add(d, c[k + d] - c[k]);
    }
    return cost;
  }

  bool collides(std::size_t d, Value diff) const { return slot(d, diff) > 1; }

  // Returns the cost change of inserting / removing one entry.
  Cost add(std::size_t d, Value diff) { return slot(d, diff)++ > 0 ? 1 : 0; }
  Cost remove(std::size_t d, Value diff) { return --slot(d, diff) > 0 ? -1 : 0; }

 private:
  int& slot(std::size_t d, Value diff) {
    return counts_[d * width_ + static_cast<std::size_t>(diff + static_cast<Value>(n_) - 1)];
  }
  int slot(std::size_t d, Value diff) const {
    return counts_[d * width_ + static_cast<std::size_t>(diff + static_cast<Value>(n_) - 1)];
  }

  std::size_t n_;
  std::size_t width_;
  std::vector<int> counts_;
};

Cost colliding_entries(std::span<const Value> c, const DifferenceTriangle& tri, std::size_t i) {
  Cost err = 0;
  for (std::size_t d = 1; d < c.size(); ++d) {
    if (i + d < c.size() && tri.collides(d, c[i + d] - c[i])) ++err;
    if (i >= d && tri.collides(d, c[i] - c[i - d])) ++err;
  }
  return err;
}

class CostasEvaluator final : public Evaluator {
 public:
  explicit CostasEvaluator(const CostasModel& model) : model_(model), triangle_(model.size()) {}

  Cost reset(std::span<const Value> c) override {
    cost_ = model_.cost_of_solution(c);
    triangle_.rebuild(c);
    return cost_;
  }

  Cost cost_on_variable(std::span<const Value> c, std::size_t i) override {
    return colliding_entries(c, triangle_, i);
  }

  Cost cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                    std::size_t j) override {
    if (i == j) return current;
    const Cost result = current + exchange(c, i, j, /*exchanged=*/false);
    exchange(c, i, j, /*exchanged=*/false, /*reverse=*/true);
    return result;
  }

  void swapped(std::span<const Value> c, std::size_t i, std::size_t j) override {
    if (i == j) return;
    cost_ += exchange(c, i, j, /*exchanged=*/true);
  }

 private:
  // Moves the entries touching i or j from one arrangement to the other and
  // returns the cost change. With `reverse` the move goes back again.
  Cost exchange(std::span<const Value> c, std::size_t i, std::size_t j, bool exchanged,
                bool reverse = false) {
    const std::size_t n = c.size();
    auto swapped_view = [&](std::size_t p) { return p == i ? c[j] : p == j ? c[i] : c[p]; };
    auto from = [&](std::size_t p) { return exchanged == reverse ? c[p] : swapped_view(p); };
    auto to = [&](std::size_t p) { return exchanged == reverse ? swapped_view(p) : c[p]; };
    Cost delta = 0;
    for (std::size_t d = 1; d < n; ++d) {
      std::array<std::size_t, 4> starts{};
      std::size_t count = 0;
      auto push = [&](std::size_t k) {
        if (k + d >= n) return;
        for (std::size_t t = 0; t < count; ++t) {
          if (starts[t] == k) return;
        }
        starts[count++] = k;
      };
      push(i);
      if (i >= d) push(i - d);
      push(j);
      if (j >= d) push(j - d);
      for (std::size_t t = 0; t < count; ++t) {
        delta += triangle_.remove(d, from(starts[t] + d) - from(starts[t]));
      }
      for (std::size_t t = 0; t < count; ++t) {
        delta += triangle_.add(d, to(starts[t] + d) - to(starts[t]));
      }
    }
    return delta;
  }

  const CostasModel& model_;
  DifferenceTriangle triangle_;
  Cost cost_ = 0;
};

}  // namespace

CostasModel::CostasModel(int order) : order_(order) {
  if (order < 1) {
    throw std::invalid_argument("costas: order must be at least 1, got " + std::to_string(order));
  }
}

std::vector<Value> CostasModel::base_domain() const {
  std::vector<Value> domain(size());
  std::iota(domain.begin(), domain.end(), Value{1});
  return domain;
}

Cost CostasModel::cost_of_solution(std::span<const Value> c) const {
  check_domain(c);
  return DifferenceTriangle(c.size()).rebuild(c);
}

Cost CostasModel::cost_on_variable(std::span<const Value> c, std::size_t i) const {
  check_domain(c);
  check_index(i, i);
  DifferenceTriangle tri(c.size());
  tri.rebuild(c);
  return colliding_entries(c, tri, i);
}

bool CostasModel::verify(std::span<const Value> c) const {
  if (c.size() != size() || !is_permutation_of(c, base_domain())) return false;
  // Marks at (column k, row c[k]); every joining vector must be unique.
  std::set<std::pair<long, long>> vectors;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      const auto v = std::make_pair(static_cast<long>(b - a), static_cast<long>(c[b] - c[a]));
      if (!vectors.insert(v).second) return false;
    }
  }
  return true;
}

std::unique_ptr<ProblemModel> CostasModel::clone() const {
  return std::make_unique<CostasModel>(*this);
}

std::unique_ptr<Evaluator> CostasModel::make_evaluator() const {
  return std::make_unique<CostasEvaluator>(*this);
}

}  // namespace asearch
