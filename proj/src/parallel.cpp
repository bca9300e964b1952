#include "asearch/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "asearch/cancellation.hpp"
#include "asearch/random.hpp"

namespace asearch {

std::size_t default_worker_count() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

SolveOutcome multi_walk_solve(const ModelFactory& factory, const SolverParams& params,
                              const MultiWalkOptions& options) {
  if (options.workers == 0) throw std::invalid_argument("multi_walk_solve: workers must be >= 1");
  if (!factory) throw std::invalid_argument("multi_walk_solve: empty model factory");
  params.validate();

  const auto start = std::chrono::steady_clock::now();
  const std::size_t workers = options.workers;

  std::vector<std::unique_ptr<ProblemModel>> models;
  models.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    models.push_back(factory());
    if (!models.back()) throw std::invalid_argument("multi_walk_solve: factory returned null");
  }

  CancellationToken cancel;
  std::atomic<std::ptrdiff_t> winner{-1};
  std::vector<SolveOutcome> slots(workers);

  std::mutex done_mutex;
  std::condition_variable done_cv;
  std::size_t done = 0;

  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        SolverParams walk = params;
        walk.seed = derive_seed(options.seed_base, w);
        RandomSource rng(walk.seed);
        SolveOutcome out = solve(*models[w], walk, rng, cancel);
        out.worker_id = w;
        if (out.solved) {
          std::ptrdiff_t expected = -1;
          if (winner.compare_exchange_strong(expected, static_cast<std::ptrdiff_t>(w))) {
            cancel.cancel();
          }
        }
        slots[w] = std::move(out);
        {
          std::lock_guard lock(done_mutex);
          ++done;
        }
        done_cv.notify_all();
      });
    }
    if (options.timeout) {
      std::unique_lock lock(done_mutex);
      const bool finished =
          done_cv.wait_for(lock, *options.timeout, [&] { return done == workers; });
      if (!finished) cancel.cancel();
    }
  }  // joins every walk

  std::size_t pick = 0;
  if (winner.load() >= 0) {
    pick = static_cast<std::size_t>(winner.load());
  } else {
    for (std::size_t w = 1; w < workers; ++w) {
      if (slots[w].cost < slots[pick].cost) pick = w;
    }
  }
  SolveOutcome result = std::move(slots[pick]);
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

SolveOutcome multi_walk_solve(const ModelFactory& factory, const SolverParams& params,
                              std::size_t workers, std::uint64_t seed_base) {
  return multi_walk_solve(factory, params, MultiWalkOptions{workers, seed_base, std::nullopt});
}

}  // namespace asearch
