#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "asearch/model.hpp"
#include "asearch/solver.hpp"

namespace asearch {

/// Produces one fresh model per walk. Called on the calling thread only.
using ModelFactory = std::function<std::unique_ptr<ProblemModel>()>;

struct MultiWalkOptions {
  std::size_t workers = 1;
  std::uint64_t seed_base = 0;
  /// Wall-clock bound for the whole pool; on expiry every walk is cancelled.
  std::optional<std::chrono::duration<double>> timeout;
};

/// Hardware threads reported by the host, at least 1.
std::size_t default_worker_count() noexcept;

/// Independent multi-walk search.
///
/// Runs `workers` isolated solvers on their own threads, walk w seeded with
/// derive_seed(seed_base, w). The first walk to reach cost zero claims the
/// result slot and cancels the others; its outcome is returned with
/// worker_id set. Without a winner the lowest-cost outcome is returned (ties
/// to the lowest worker id). `elapsed` is the wall time of the whole pool.
/// All threads are joined before returning.
SolveOutcome multi_walk_solve(const ModelFactory& factory, const SolverParams& params,
                              const MultiWalkOptions& options);

SolveOutcome multi_walk_solve(const ModelFactory& factory, const SolverParams& params,
                              std::size_t workers, std::uint64_t seed_base);

}  // namespace asearch
