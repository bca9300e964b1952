#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "asearch/cancellation.hpp"
#include "asearch/configuration.hpp"
#include "asearch/model.hpp"
#include "asearch/random.hpp"
#include "asearch/types.hpp"

namespace asearch {

struct SolverParams {
  /// Iterations a variable stays frozen after a local minimum.
  std::uint64_t tenure = 10;
  /// Number of frozen variables that triggers a partial reset. Clamped to n.
  std::uint64_t reset_limit = 2;
  /// Iterations per restart.
  std::uint64_t max_iterations = 1'000'000;
  /// Total descents, counting the first one.
  std::uint64_t max_restarts = 100;
  /// Share of the variables disturbed by a partial reset, in (0, 1].
  double reset_fraction = 0.1;
  /// Percent chance, at a local minimum, of performing the culprit's best
  /// exchange anyway instead of freezing it. 0 keeps strict improvement.
  std::uint32_t escape_percent = 0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when any field is out of range.
  void validate() const;

  friend bool operator==(const SolverParams&, const SolverParams&) = default;
};

enum class StopReason { solved, budget_exhausted, cancelled };

std::string_view to_string(StopReason reason) noexcept;

struct SolveOutcome {
  Configuration solution;
  Cost cost = 0;
  std::uint64_t iterations_total = 0;
  /// Fresh configurations drawn after the initial one.
  std::uint64_t restarts = 0;
  std::chrono::duration<double> elapsed{0};
  bool solved = false;
  StopReason stop = StopReason::budget_exhausted;
  std::optional<std::size_t> worker_id;
};

/// Search state of one descent. A variable i is tabu while
/// iteration < tabu_until[i].
struct SolverState {
  std::uint64_t iteration = 0;
  std::uint64_t restart = 0;
  std::vector<std::uint64_t> tabu_until;
  std::size_t frozen_count = 0;
  Configuration best_config;
  Cost best_cost = 0;
  Cost current_cost = 0;

  bool is_tabu(std::size_t i) const noexcept { return iteration < tabu_until[i]; }
  /// Recounts variables that are tabu at the current iteration.
  std::size_t count_frozen() const noexcept;
  void clear_tabu() noexcept;
};

struct MinConflictMove {
  std::size_t target;
  Cost projected_cost;
};

/// Non-tabu variable with the largest projected error, ties broken uniformly.
/// Empty when every variable is tabu.
std::optional<std::size_t> select_var_high_cost(Evaluator& eval, const Configuration& c,
                                                const SolverState& state, RandomSource& rng);

/// Partner j != max_i whose exchange with max_i gives the lowest total cost,
/// ties broken uniformly. Empty when n == 1.
std::optional<MinConflictMove> select_var_min_conflict(Evaluator& eval, const Configuration& c,
                                                       Cost current_cost, std::size_t max_i,
                                                       RandomSource& rng);

/// Applies ceil(fraction * n) uniformly random transpositions of distinct
/// positions and clears every tabu mark. Returns the transpositions applied.
/// The caller recomputes the cost.
std::vector<std::pair<std::size_t, std::size_t>> partial_reset(Configuration& c, double fraction,
                                                               SolverState& state,
                                                               RandomSource& rng);

/// One observable transition of the search, for instrumentation.
struct TraceEvent {
  enum class Kind {
    restart,  // fresh random configuration drawn; config holds it
    move,     // culprit `variable` exchanged with `target`
    tabu,     // no improving exchange; `variable` frozen until `tabu_until`
    escape,   // no improving exchange, but the best one was taken anyway
    reset,    // partial reset; transpositions holds what was applied
    improve,  // new incumbent; config holds it
  };
  Kind kind = Kind::restart;
  std::uint64_t restart = 0;
  std::uint64_t iteration = 0;
  std::size_t variable = 0;
  std::size_t target = 0;
  Cost cost_before = 0;
  Cost cost_after = 0;
  std::size_t frozen_count = 0;
  std::uint64_t tabu_until = 0;
  std::vector<std::pair<std::size_t, std::size_t>> transpositions;
  std::vector<Value> config;
};

using TraceSink = std::function<void(const TraceEvent&)>;

/// Adaptive Search over a permutation model.
///
/// Each descent starts from a uniform random permutation. Every iteration the
/// non-tabu variable with the highest projected error is repaired with its
/// best exchange. When no exchange strictly lowers the cost the variable is
/// frozen for `tenure` iterations (or, with chance `escape_percent`, the best
/// exchange is applied regardless); once `reset_limit` variables are frozen a
/// partial reset perturbs the configuration and clears all marks. A descent
/// ends after `max_iterations`; the search ends on cost zero, after
/// `max_restarts` descents, or when `cancel` is observed (polled once per
/// iteration). The returned solution is the best configuration of the whole
/// run.
SolveOutcome solve(const ProblemModel& model, const SolverParams& params, RandomSource& rng,
                   const CancellationToken& cancel, const TraceSink& trace = {});

/// Same, with a private token and a RandomSource seeded from params.seed.
SolveOutcome solve(const ProblemModel& model, const SolverParams& params);

}  // namespace asearch
