#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asearch/model.hpp"

namespace asearch {

/// N x N grid holding 1..N^2; every row, column and both diagonals must sum
/// to N(N^2+1)/2. Variable k is cell (k / N, k % N).
///
/// Cost: sum over all 2N+2 lines of |line sum - magic constant|.
/// Projection: the same deviation summed over the lines through the cell.
class MagicSquareModel final : public ProblemModel {
 public:
  /// Requires side >= 3.
  explicit MagicSquareModel(int side);

  std::string_view name() const noexcept override { return "magic-square"; }
  int order() const noexcept override { return side_; }
  std::size_t size() const noexcept override { return static_cast<std::size_t>(side_) * side_; }
  std::vector<Value> base_domain() const override;
  Cost magic_constant() const noexcept { return magic_; }

  Cost cost_of_solution(std::span<const Value> c) const override;
  Cost cost_on_variable(std::span<const Value> c, std::size_t k) const override;
  Cost cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                    std::size_t j) const override;
  bool verify(std::span<const Value> c) const override;

  std::unique_ptr<ProblemModel> clone() const override;
  std::unique_ptr<Evaluator> make_evaluator() const override;

 private:
  int side_;
  Cost magic_;
};

/// Permutation of 0..N-1 whose consecutive absolute differences are all
/// distinct.
///
/// Cost: sum of d^6 over the distances d in 1..N-1 that never occur, so a
/// missing long distance outweighs several missing short ones.
/// Projection: for an unsolved sequence, 1 plus the largest cost decrease any
/// exchange of the position achieves (0 when no exchange helps); 0 everywhere
/// on a solution.
class AllIntervalModel final : public ProblemModel {
 public:
  /// Largest length whose worst cost still fits in a Cost.
  static constexpr int max_length = 600;

  /// Requires 1 <= length <= max_length.
  explicit AllIntervalModel(int length);

  /// Cost contribution of a missing distance d.
  static Cost distance_weight(Value d) noexcept {
    const Cost w = d;
    return w * w * w * w * w * w;
  }

  std::string_view name() const noexcept override { return "all-interval"; }
  int order() const noexcept override { return length_; }
  std::size_t size() const noexcept override { return static_cast<std::size_t>(length_); }
  std::vector<Value> base_domain() const override;

  Cost cost_of_solution(std::span<const Value> c) const override;
  Cost cost_on_variable(std::span<const Value> c, std::size_t i) const override;
  bool verify(std::span<const Value> c) const override;

  std::unique_ptr<ProblemModel> clone() const override;
  std::unique_ptr<Evaluator> make_evaluator() const override;

 private:
  int length_;
};

/// Split 1..N into two halves of equal cardinality with equal sums and equal
/// sums of squares. Positions 0..N/2-1 form group A, the rest group B.
///
/// Cost: |sum(A) - sum(B)| + |sumsq(A) - sumsq(B)|.
/// Projection: for an unsolved split, 1 plus the largest cost decrease that
/// exchanging the value with a member of the other group achieves (0 when
/// none helps); 0 everywhere on a solution.
class PartitionModel final : public ProblemModel {
 public:
  /// Requires count > 0 and count % 4 == 0; other sizes have no solution.
  explicit PartitionModel(int count);

  std::string_view name() const noexcept override { return "partition"; }
  int order() const noexcept override { return count_; }
  std::size_t size() const noexcept override { return static_cast<std::size_t>(count_); }
  std::vector<Value> base_domain() const override;

  Cost cost_of_solution(std::span<const Value> c) const override;
  Cost cost_on_variable(std::span<const Value> c, std::size_t i) const override;
  Cost cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                    std::size_t j) const override;
  bool verify(std::span<const Value> c) const override;

  std::unique_ptr<ProblemModel> clone() const override;
  std::unique_ptr<Evaluator> make_evaluator() const override;

 private:
  int count_;
};

/// Permutation of 1..N read as one mark per column; all vectors joining two
/// marks must differ. Equivalently each row d of the difference triangle,
/// D_d(i) = c[i+d] - c[i], holds distinct entries.
///
/// Cost: total surplus entries over all rows, sum_d ((N-d) - distinct_d).
/// Projection: number of triangle entries touching the position that collide
/// with another entry of their row.
class CostasModel final : public ProblemModel {
 public:
  /// Requires order >= 1.
  explicit CostasModel(int order);

  std::string_view name() const noexcept override { return "costas"; }
  int order() const noexcept override { return order_; }
  std::size_t size() const noexcept override { return static_cast<std::size_t>(order_); }
  std::vector<Value> base_domain() const override;

  Cost cost_of_solution(std::span<const Value> c) const override;
  Cost cost_on_variable(std::span<const Value> c, std::size_t i) const override;
  bool verify(std::span<const Value> c) const override;

  std::unique_ptr<ProblemModel> clone() const override;
  std::unique_ptr<Evaluator> make_evaluator() const override;

 private:
  int order_;
};

/// Registered names: "magic-square", "all-interval", "partition", "costas".
std::vector<std::string> model_names();
bool is_registered_model(std::string_view name);

/// Builds a model by registry name. Throws std::invalid_argument for an
/// unknown name or a size the model rejects.
std::unique_ptr<ProblemModel> make_model(std::string_view name, int size);

}  // namespace asearch
