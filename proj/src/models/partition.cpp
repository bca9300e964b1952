#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iterator>
#include <set>
#include <numeric>
#include <stdexcept>
#include <string>

#include "asearch/configuration.hpp"
#include "asearch/models.hpp"

namespace asearch {

namespace {

struct GroupSums {
  Cost sum = 0;     // sum of group A
  Cost squares = 0; // sum of squares of group A
};

std::set<Value> group_values(std::span<const Value> c, bool a) {
  const std::size_t half = c.size() / 2;
  return a ? std::set<Value>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half))
           : std::set<Value>(c.begin() + static_cast<std::ptrdiff_t>(half), c.end());
}

GroupSums group_a_sums(std::span<const Value> c) {
  GroupSums s;
  for (std::size_t i = 0; i < c.size() / 2; ++i) {
    s.sum += c[i];
    s.squares += static_cast<Cost>(c[i]) * c[i];
  }
  return s;
}

class Imbalance {
 public:
  explicit Imbalance(int count) {
    const Cost n = count;
    total_ = n * (n + 1) / 2;
    total_squares_ = n * (n + 1) * (2 * n + 1) / 6;
  }

  // Signed A - B differences.
  Cost sum_gap(const GroupSums& a) const { return 2 * a.sum - total_; }
  Cost square_gap(const GroupSums& a) const { return 2 * a.squares - total_squares_; }
  Cost cost(const GroupSums& a) const { return std::abs(sum_gap(a)) + std::abs(square_gap(a)); }

  // Lowest cost reachable by exchanging a value v of one group with any member of
  // `partner` (the other group). On each interval between the zeros of the two
  // gaps the cost is convex-increasing or concave in the partner value, so the
  // minimum sits next to a zero or at an extreme of the partner group.
  Cost best_exchange(const GroupSums& a, Value v, bool in_a, const std::set<Value>& partner) const {
    if (partner.empty()) return cost(a);
    const Cost d1 = sum_gap(a);
    const Cost d2 = square_gap(a);
    const Cost lv = v;
    // Taking e from the other group: A changes by (e - v) if v is in A, by (v - e) otherwise.
    const Cost sign = in_a ? 1 : -1;
    auto after = [&](Cost e) {
      return std::abs(d1 + sign * 2 * (e - lv)) + std::abs(d2 + sign * 2 * (e * e - lv * lv));
    };
    Cost best = std::min(after(*partner.begin()), after(*partner.rbegin()));
    auto probe = [&](double target) {
      if (!std::isfinite(target)) return;
      const auto clamped = std::clamp(target, 0.0, static_cast<double>(*partner.rbegin()) + 1.0);
      // The members on either side of target: the first one >= floor(target)
      // may still sit below it, so look one further.
      auto it = partner.lower_bound(static_cast<Value>(std::floor(clamped)));
      if (it != partner.begin()) best = std::min(best, after(*std::prev(it)));
      for (int k = 0; k < 2 && it != partner.end(); ++k, ++it) best = std::min(best, after(*it));
    };
    probe(static_cast<double>(lv) - sign * static_cast<double>(d1) / 2.0);
    const double square = static_cast<double>(lv * lv) - sign * static_cast<double>(d2) / 2.0;
    if (square >= 0.0) probe(std::sqrt(square));
    return best;
  }

  // Improvement available through v, plus one so that every variable of an
  // unsolved configuration scores at least 1.
  Cost projection(const GroupSums& a, Value v, bool in_a, const std::set<Value>& partner) const {
    const Cost current = cost(a);
    if (current == 0) return 0;
    return std::max<Cost>(0, current - best_exchange(a, v, in_a, partner)) + 1;
  }

  // Cost after exchanging positions i and j.
  Cost swap_cost(const GroupSums& a, std::span<const Value> c, Cost current, std::size_t i,
                 std::size_t j) const {
    const std::size_t half = c.size() / 2;
    if ((i < half) == (j < half)) return current;
    const Cost leaving = i < half ? c[i] : c[j];
    const Cost entering = i < half ? c[j] : c[i];
    GroupSums next = a;
    next.sum += entering - leaving;
    next.squares += entering * entering - leaving * leaving;
    return cost(next);
  }

 private:
  Cost total_;
  Cost total_squares_;
};

class PartitionEvaluator final : public Evaluator {
 public:
  explicit PartitionEvaluator(const PartitionModel& model)
      : model_(model), imbalance_(model.order()) {}

  Cost reset(std::span<const Value> c) override {
    const Cost cost = model_.cost_of_solution(c);
    sums_ = group_a_sums(c);
    group_a_ = group_values(c, true);
    group_b_ = group_values(c, false);
    return cost;
  }

  Cost cost_on_variable(std::span<const Value> c, std::size_t i) override {
    const bool in_a = i < c.size() / 2;
    return imbalance_.projection(sums_, c[i], in_a, in_a ? group_b_ : group_a_);
  }

  Cost cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                    std::size_t j) override {
    return imbalance_.swap_cost(sums_, c, current, i, j);
  }

  void swapped(std::span<const Value> c, std::size_t i, std::size_t j) override {
    const std::size_t half = c.size() / 2;
    if ((i < half) == (j < half)) return;
    const Cost entering = i < half ? c[i] : c[j];
    const Cost leaving = i < half ? c[j] : c[i];
    sums_.sum += entering - leaving;
    sums_.squares += entering * entering - leaving * leaving;
    group_a_.erase(static_cast<Value>(leaving));
    group_a_.insert(static_cast<Value>(entering));
    group_b_.erase(static_cast<Value>(entering));
    group_b_.insert(static_cast<Value>(leaving));
  }

 private:
  const PartitionModel& model_;
  Imbalance imbalance_;
  GroupSums sums_;
  std::set<Value> group_a_;
  std::set<Value> group_b_;
};

}  // namespace

PartitionModel::PartitionModel(int count) : count_(count) {
  if (count <= 0 || count % 4 != 0) {
    throw std::invalid_argument("partition: size must be a positive multiple of 4, got " +
                                std::to_string(count));
  }
}

std::vector<Value> PartitionModel::base_domain() const {
  std::vector<Value> domain(size());
  std::iota(domain.begin(), domain.end(), Value{1});
  return domain;
}

Cost PartitionModel::cost_of_solution(std::span<const Value> c) const {
  check_domain(c);
  return Imbalance(count_).cost(group_a_sums(c));
}

Cost PartitionModel::cost_on_variable(std::span<const Value> c, std::size_t i) const {
  check_size(c);
  check_index(i, i);
  const bool in_a = i < c.size() / 2;
  return Imbalance(count_).projection(group_a_sums(c), c[i], in_a, group_values(c, !in_a));
}

Cost PartitionModel::cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                                  std::size_t j) const {
  check_size(c);
  check_index(i, j);
  return Imbalance(count_).swap_cost(group_a_sums(c), c, current, i, j);
}

bool PartitionModel::verify(std::span<const Value> c) const {
  if (c.size() != size() || !is_permutation_of(c, base_domain())) return false;
  const std::size_t half = c.size() / 2;
  Cost sum_a = 0, sum_b = 0, sq_a = 0, sq_b = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Cost v = c[i];
    (i < half ? sum_a : sum_b) += v;
    (i < half ? sq_a : sq_b) += v * v;
  }
  return sum_a == sum_b && sq_a == sq_b;
}

std::unique_ptr<ProblemModel> PartitionModel::clone() const {
  return std::make_unique<PartitionModel>(*this);
}

std::unique_ptr<Evaluator> PartitionModel::make_evaluator() const {
  return std::make_unique<PartitionEvaluator>(*this);
}

}  // namespace asearch
