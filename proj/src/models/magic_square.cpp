#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "asearch/configuration.hpp"
#include "asearch/models.hpp"

namespace asearch {

namespace {

// Lines are numbered rows 0..N-1, columns N..2N-1, main diagonal 2N and
// anti-diagonal 2N+1.
struct LineChange {
  std::size_t line;
  Cost delta;
};

// Up to four lines per cell, two cells per exchange.
class LineChanges {
 public:
  void add(std::size_t line, Cost delta) {
    for (std::size_t k = 0; k < count_; ++k) {
      if (items_[k].line == line) {
        items_[k].delta += delta;
        return;
      }
    }
    items_[count_++] = {line, delta};
  }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.begin() + static_cast<std::ptrdiff_t>(count_); }

 private:
  std::array<LineChange, 8> items_{};
  std::size_t count_ = 0;
};

void add_cell_lines(LineChanges& changes, int side, std::size_t k, Cost delta) {
  const auto n = static_cast<std::size_t>(side);
  const std::size_t r = k / n;
  const std::size_t col = k % n;
  changes.add(r, delta);
  changes.add(n + col, delta);
  if (r == col) changes.add(2 * n, delta);
  if (r + col == n - 1) changes.add(2 * n + 1, delta);
}

Cost line_sum(std::span<const Value> c, int side, std::size_t line) {
  const auto n = static_cast<std::size_t>(side);
  Cost sum = 0;
  if (line < n) {
    for (std::size_t col = 0; col < n; ++col) sum += c[line * n + col];
  } else if (line < 2 * n) {
    for (std::size_t r = 0; r < n; ++r) sum += c[r * n + (line - n)];
  } else if (line == 2 * n) {
    for (std::size_t r = 0; r < n; ++r) sum += c[r * n + r];
  } else {
    for (std::size_t r = 0; r < n; ++r) sum += c[r * n + (n - 1 - r)];
  }
  return sum;
}

template <typename SumOf>
Cost swap_cost(int side, Cost magic, std::span<const Value> c, Cost current, std::size_t i,
               std::size_t j, SumOf&& sum_of) {
  if (i == j) return current;
  const Cost delta = static_cast<Cost>(c[j]) - c[i];  // change at cell i
  LineChanges changes;
  add_cell_lines(changes, side, i, delta);
  add_cell_lines(changes, side, j, -delta);
  Cost result = current;
  for (const auto& [line, d] : changes) {
    if (d == 0) continue;
    const Cost sum = sum_of(line);
    result += std::abs(sum + d - magic) - std::abs(sum - magic);
  }
  return result;
}

class MagicSquareEvaluator final : public Evaluator {
 public:
  explicit MagicSquareEvaluator(const MagicSquareModel& model)
      : model_(model),
        side_(model.order()),
        magic_(model.magic_constant()),
        sums_(2 * static_cast<std::size_t>(side_) + 2, 0) {}

  Cost reset(std::span<const Value> c) override {
    cost_ = model_.cost_of_solution(c);
    for (std::size_t line = 0; line < sums_.size(); ++line) sums_[line] = line_sum(c, side_, line);
    return cost_;
  }

  Cost cost_on_variable(std::span<const Value>, std::size_t k) override {
    const auto n = static_cast<std::size_t>(side_);
    const std::size_t r = k / n;
    const std::size_t col = k % n;
    Cost err = std::abs(sums_[r] - magic_) + std::abs(sums_[n + col] - magic_);
    if (r == col) err += std::abs(sums_[2 * n] - magic_);
    if (r + col == n - 1) err += std::abs(sums_[2 * n + 1] - magic_);
    return err;
  }

  Cost cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                    std::size_t j) override {
    return swap_cost(side_, magic_, c, current, i, j,
                     [this](std::size_t line) { return sums_[line]; });
  }

  void swapped(std::span<const Value> c, std::size_t i, std::size_t j) override {
    if (i == j) return;
    // c is already exchanged: cell i now holds c[i], previously c[j].
    const Cost delta = static_cast<Cost>(c[i]) - c[j];
    LineChanges changes;
    add_cell_lines(changes, side_, i, delta);
    add_cell_lines(changes, side_, j, -delta);
    for (const auto& [line, d] : changes) {
      cost_ += std::abs(sums_[line] + d - magic_) - std::abs(sums_[line] - magic_);
      sums_[line] += d;
    }
  }

 private:
  const MagicSquareModel& model_;
  int side_;
  Cost magic_;
  std::vector<Cost> sums_;
  Cost cost_ = 0;
};

}  // namespace

MagicSquareModel::MagicSquareModel(int side) : side_(side), magic_(0) {
  if (side < 3) {
    throw std::invalid_argument("magic-square: side must be at least 3, got " +
                                std::to_string(side));
  }
  const Cost n = side;
  magic_ = n * (n * n + 1) / 2;
}

std::vector<Value> MagicSquareModel::base_domain() const {
  std::vector<Value> domain(size());
  std::iota(domain.begin(), domain.end(), Value{1});
  return domain;
}

Cost MagicSquareModel::cost_of_solution(std::span<const Value> c) const {
  check_domain(c);
  Cost cost = 0;
  for (std::size_t line = 0; line < 2 * static_cast<std::size_t>(side_) + 2; ++line) {
    cost += std::abs(line_sum(c, side_, line) - magic_);
  }
  return cost;
}

Cost MagicSquareModel::cost_on_variable(std::span<const Value> c, std::size_t k) const {
  check_size(c);
  check_index(k, k);
  const auto n = static_cast<std::size_t>(side_);
  const std::size_t r = k / n;
  const std::size_t col = k % n;
  Cost err = std::abs(line_sum(c, side_, r) - magic_) + std::abs(line_sum(c, side_, n + col) - magic_);
  if (r == col) err += std::abs(line_sum(c, side_, 2 * n) - magic_);
  if (r + col == n - 1) err += std::abs(line_sum(c, side_, 2 * n + 1) - magic_);
  return err;
}

Cost MagicSquareModel::cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                                    std::size_t j) const {
  check_size(c);
  check_index(i, j);
  return swap_cost(side_, magic_, c, current, i, j,
                   [&](std::size_t line) { return line_sum(c, side_, line); });
}

bool MagicSquareModel::verify(std::span<const Value> c) const {
  const auto n = static_cast<std::size_t>(side_);
  if (c.size() != n * n || !is_permutation_of(c, base_domain())) return false;
  const Cost target = static_cast<Cost>(n) * static_cast<Cost>(n * n + 1) / 2;
  Cost diag = 0;
  Cost anti = 0;
  for (std::size_t r = 0; r < n; ++r) {
    Cost row = 0;
    Cost col = 0;
    for (std::size_t k = 0; k < n; ++k) {
      row += c[r * n + k];
      col += c[k * n + r];
    }
    if (row != target || col != target) return false;
    diag += c[r * n + r];
    anti += c[r * n + (n - 1 - r)];
  }
  return diag == target && anti == target;
}

std::unique_ptr<ProblemModel> MagicSquareModel::clone() const {
  return std::make_unique<MagicSquareModel>(*this);
}

std::unique_ptr<Evaluator> MagicSquareModel::make_evaluator() const {
  return std::make_unique<MagicSquareEvaluator>(*this);
}

}  // namespace asearch
