#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "asearch/types.hpp"

namespace asearch {

class ProblemModel;

/// Stateful cost session over one configuration.
///
/// The solver binds an evaluator with reset(), asks for projected errors and
/// swap costs, and reports every exchange it applies through swapped(). A
/// model can keep line sums or difference counts here so each query costs
/// O(1) or O(n) rather than a full recompute. Results must always equal the
/// model's pure functions on the same configuration.
class Evaluator {
 public:
  virtual ~Evaluator() = default;

  /// Rebuilds internal state for `c` and returns its full cost.
  virtual Cost reset(std::span<const Value> c) = 0;
  virtual Cost cost_on_variable(std::span<const Value> c, std::size_t i) = 0;
  virtual Cost cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                            std::size_t j) = 0;
  /// Called after positions i and j of `c` were exchanged.
  virtual void swapped(std::span<const Value> c, std::size_t i, std::size_t j) = 0;
};

/// A permutation CSP: a fixed base domain, a cost that is zero exactly at
/// solutions, a projection of constraint errors onto variables and an
/// independent verifier.
///
/// Implementations must guarantee, for every permutation c of base_domain():
///   cost_of_solution(c) >= 0, cost_on_variable(c, i) >= 0,
///   cost_of_solution(c) == 0  <=>  verify(c),
///   cost_if_swap(c, cost_of_solution(c), i, j) == cost of c with i, j exchanged.
class ProblemModel {
 public:
  virtual ~ProblemModel() = default;

  /// Registry name, e.g. "costas".
  virtual std::string_view name() const noexcept = 0;
  /// Instance parameter as given on the command line (side for magic squares).
  virtual int order() const noexcept = 0;
  /// Number of variables.
  virtual std::size_t size() const noexcept = 0;
  /// The permuted value set, ascending.
  virtual std::vector<Value> base_domain() const = 0;

  virtual Cost cost_of_solution(std::span<const Value> c) const = 0;
  virtual Cost cost_on_variable(std::span<const Value> c, std::size_t i) const = 0;
  /// Default: copy, exchange and recompute in full.
  virtual Cost cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                            std::size_t j) const;
  /// Re-derives satisfaction from the problem statement without calling any
  /// cost function. False for anything that is not a permutation of the domain.
  virtual bool verify(std::span<const Value> c) const = 0;

  virtual std::unique_ptr<ProblemModel> clone() const = 0;
  /// Default: an evaluator that forwards to the pure functions above.
  virtual std::unique_ptr<Evaluator> make_evaluator() const;

 protected:
  /// Throws std::invalid_argument unless c has size() entries.
  void check_size(std::span<const Value> c) const;
  /// Throws std::invalid_argument unless c permutes base_domain().
  void check_domain(std::span<const Value> c) const;
  /// Throws std::out_of_range unless i, j < size().
  void check_index(std::size_t i, std::size_t j) const;
};

/// Forwards every query to the model's pure functions. No caching.
class ForwardingEvaluator final : public Evaluator {
 public:
  explicit ForwardingEvaluator(const ProblemModel& model) : model_(model) {}

  Cost reset(std::span<const Value> c) override { return model_.cost_of_solution(c); }
  Cost cost_on_variable(std::span<const Value> c, std::size_t i) override {
    return model_.cost_on_variable(c, i);
  }
  Cost cost_if_swap(std::span<const Value> c, Cost current, std::size_t i,
                    std::size_t j) override {
    return model_.cost_if_swap(c, current, i, j);
  }
  void swapped(std::span<const Value>, std::size_t, std::size_t) override {}

 private:
  const ProblemModel& model_;
};

}  // namespace asearch
