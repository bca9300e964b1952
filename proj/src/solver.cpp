#include "asearch/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asearch {

void SolverParams::validate() const {
  if (tenure < 1) throw std::invalid_argument("solver: tenure must be at least 1");
  if (reset_limit < 1) throw std::invalid_argument("solver: reset limit must be at least 1");
  if (max_iterations < 1) throw std::invalid_argument("solver: max iterations must be at least 1");
  if (max_restarts < 1) throw std::invalid_argument("solver: max restarts must be at least 1");
  if (!(reset_fraction > 0.0 && reset_fraction <= 1.0)) {
    throw std::invalid_argument("solver: reset fraction must lie in (0, 1]");
  }
  if (escape_percent > 100) throw std::invalid_argument("solver: escape percent must be at most 100");
}

std::string_view to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::solved: return "solved";
    case StopReason::budget_exhausted: return "budget-exhausted";
    case StopReason::cancelled: return "cancelled";
  }
  return "unknown";
}

std::size_t SolverState::count_frozen() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(tabu_until.begin(), tabu_until.end(),
                    [this](std::uint64_t until) { return iteration < until; }));
}

void SolverState::clear_tabu() noexcept {
  std::fill(tabu_until.begin(), tabu_until.end(), 0);
  frozen_count = 0;
}

std::optional<std::size_t> select_var_high_cost(Evaluator& eval, const Configuration& c,
                                                const SolverState& state, RandomSource& rng) {
  std::optional<std::size_t> chosen;
  Cost best = -1;
  std::uint64_t ties = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (state.is_tabu(i)) continue;
    const Cost err = eval.cost_on_variable(c, i);
    if (err > best) {
      best = err;
      chosen = i;
      ties = 1;
    } else if (err == best && rng.below(++ties) == 0) {
      chosen = i;
    }
  }
  return chosen;
}

std::optional<MinConflictMove> select_var_min_conflict(Evaluator& eval, const Configuration& c,
                                                       Cost current_cost, std::size_t max_i,
                                                       RandomSource& rng) {
  if (max_i >= c.size()) throw std::out_of_range("select_var_min_conflict: index out of range");
  std::optional<MinConflictMove> best;
  std::uint64_t ties = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == max_i) continue;
    const Cost projected = eval.cost_if_swap(c, current_cost, max_i, j);
    if (!best || projected < best->projected_cost) {
      best = MinConflictMove{j, projected};
      ties = 1;
    } else if (projected == best->projected_cost && rng.below(++ties) == 0) {
      best->target = j;
    }
  }
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> partial_reset(Configuration& c, double fraction,
                                                               SolverState& state,
                                                               RandomSource& rng) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("partial_reset: fraction must lie in (0, 1]");
  }
  std::vector<std::pair<std::size_t, std::size_t>> applied;
  const std::size_t n = c.size();
  if (n >= 2) {
    // The epsilon keeps fractions like 0.1 * 10 from rounding up to 2.
    const auto count = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(n) - 1e-9));
    applied.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
      const auto i = static_cast<std::size_t>(rng.below(n));
      auto j = static_cast<std::size_t>(rng.below(n - 1));
      if (j >= i) ++j;
      c.swap(i, j);
      applied.emplace_back(i, j);
    }
  }
  state.clear_tabu();
  return applied;
}

namespace {

class Search {
 public:
  Search(const ProblemModel& model, const SolverParams& params, RandomSource& rng,
         const CancellationToken& cancel, const TraceSink& trace)
      : params_(params),
        rng_(rng),
        cancel_(cancel),
        trace_(trace),
        eval_(model.make_evaluator()),
        domain_(model.base_domain()),
        reset_limit_(std::min<std::uint64_t>(params.reset_limit, model.size())) {
    state_.tabu_until.assign(model.size(), 0);
  }

  SolveOutcome run() {
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome out;
    std::uint64_t iterations_total = 0;
    bool stopped = false;

    while (true) {
      ++state_.restart;
      state_.iteration = 0;
      state_.clear_tabu();
      current_ = random_permutation(std::span<const Value>(domain_), rng_);
      state_.current_cost = eval_->reset(current_);
      if (trace_) {
        TraceEvent ev;
      ev.kind = TraceEvent::Kind::restart;
        ev.restart = state_.restart;
        ev.cost_after = state_.current_cost;
        ev.config.assign(current_.values().begin(), current_.values().end());
        trace_(ev);
      }
      if (state_.restart == 1 || state_.current_cost < state_.best_cost) record_best();

      while (state_.best_cost > 0 && state_.iteration < params_.max_iterations) {
        if (cancel_.cancelled()) {
          stopped = true;
          break;
        }
        ++state_.iteration;
        ++iterations_total;
        step();
      }
      if (stopped || state_.best_cost == 0 || state_.restart >= params_.max_restarts) break;
    }

    out.solution = state_.best_config;
    out.cost = state_.best_cost;
    out.iterations_total = iterations_total;
    out.restarts = state_.restart - 1;
    out.solved = state_.best_cost == 0;
    out.stop = out.solved ? StopReason::solved
                          : stopped ? StopReason::cancelled : StopReason::budget_exhausted;
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
  }

 private:
  void step() {
    const auto culprit = select_var_high_cost(*eval_, current_, state_, rng_);
    if (!culprit) {
      // Only reachable when the limit exceeds the free variables; unfreeze.
      reset();
      return;
    }
    const auto move = select_var_min_conflict(*eval_, current_, state_.current_cost, *culprit, rng_);
    const bool improving = move && move->projected_cost < state_.current_cost;
    const bool escaping = !improving && move && params_.escape_percent > 0 &&
                          rng_.below(100) < params_.escape_percent;
    if (!improving && !escaping) {
      state_.tabu_until[*culprit] = state_.iteration + params_.tenure;
      state_.frozen_count = state_.count_frozen();
      if (trace_) {
        TraceEvent ev;
        ev.kind = TraceEvent::Kind::tabu;
        fill(ev);
        ev.variable = *culprit;
        ev.target = move ? move->target : *culprit;
        ev.cost_before = state_.current_cost;
        ev.cost_after = move ? move->projected_cost : state_.current_cost;
        ev.tabu_until = state_.tabu_until[*culprit];
        trace_(ev);
      }
      if (state_.frozen_count >= reset_limit_) reset();
      return;
    }
    const Cost before = state_.current_cost;
    current_.swap(*culprit, move->target);
    eval_->swapped(current_, *culprit, move->target);
    state_.current_cost = move->projected_cost;
    if (trace_) {
      TraceEvent ev;
      ev.kind = escaping ? TraceEvent::Kind::escape : TraceEvent::Kind::move;
      fill(ev);
      ev.variable = *culprit;
      ev.target = move->target;
      ev.cost_before = before;
      ev.cost_after = state_.current_cost;
      trace_(ev);
    }
    if (state_.current_cost < state_.best_cost) record_best();
  }

  void reset() {
    const Cost before = state_.current_cost;
    const std::size_t frozen = state_.frozen_count;
    auto applied = partial_reset(current_, params_.reset_fraction, state_, rng_);
    state_.current_cost = eval_->reset(current_);
    if (trace_) {
      TraceEvent ev;
      ev.kind = TraceEvent::Kind::reset;
      fill(ev);
      ev.frozen_count = frozen;
      ev.cost_before = before;
      ev.cost_after = state_.current_cost;
      ev.transpositions = std::move(applied);
      trace_(ev);
    }
    if (state_.current_cost < state_.best_cost) record_best();
  }

  void record_best() {
    state_.best_config = current_;
    state_.best_cost = state_.current_cost;
    if (trace_) {
      TraceEvent ev;
      ev.kind = TraceEvent::Kind::improve;
      fill(ev);
      ev.cost_after = state_.best_cost;
      ev.config.assign(current_.values().begin(), current_.values().end());
      trace_(ev);
    }
  }

  void fill(TraceEvent& ev) const {
    ev.restart = state_.restart;
    ev.iteration = state_.iteration;
    ev.frozen_count = state_.frozen_count;
  }

  const SolverParams& params_;
  RandomSource& rng_;
  const CancellationToken& cancel_;
  const TraceSink& trace_;
  std::unique_ptr<Evaluator> eval_;
  std::vector<Value> domain_;
  std::uint64_t reset_limit_;
  SolverState state_;
  Configuration current_;
};

}  // namespace

SolveOutcome solve(const ProblemModel& model, const SolverParams& params, RandomSource& rng,
                   const CancellationToken& cancel, const TraceSink& trace) {
  params.validate();
  return Search(model, params, rng, cancel, trace).run();
}

SolveOutcome solve(const ProblemModel& model, const SolverParams& params) {
  CancellationToken cancel;
  RandomSource rng(params.seed);
  return solve(model, params, rng, cancel);
}

}  // namespace asearch
