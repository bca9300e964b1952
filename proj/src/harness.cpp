#include "asearch/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "asearch/models.hpp"
#include "asearch/parallel.hpp"
#include "asearch/random.hpp"

namespace asearch {

SolverParams ParamOverrides::apply(SolverParams params) const {
  if (tenure) params.tenure = *tenure;
  if (reset_limit) params.reset_limit = *reset_limit;
  if (max_iterations) params.max_iterations = *max_iterations;
  if (max_restarts) params.max_restarts = *max_restarts;
  if (reset_fraction) params.reset_fraction = *reset_fraction;
  if (escape_percent) params.escape_percent = *escape_percent;
  return params;
}

SolverParams default_params(const std::string& problem, int size) {
  const auto n = static_cast<std::uint64_t>(make_model(problem, size)->size());
  SolverParams params;
  params.tenure = 10;
  params.reset_limit = std::max<std::uint64_t>(2, (n + 9) / 10);
  params.reset_fraction = 0.1;
  params.max_iterations = 100 * n * n;
  params.max_restarts = 100;
  if (problem == "magic-square") {
    // Line sums leave long plateaus of near-solutions.
    params.escape_percent = 10;
  } else if (problem == "partition") {
    // A solution is a few exchanges away from most near-solutions; big
    // resets only throw that away.
    params.tenure = 1;
    params.reset_limit = 1;
    params.reset_fraction = 0.01;
  }
  return params;
}

void RunSpec::validate() const {
  if (!is_registered_model(problem)) {
    throw std::invalid_argument("unknown problem '" + problem + "'");
  }
  if (sizes.empty()) throw std::invalid_argument("bench: at least one size is required");
  for (int size : sizes) make_model(problem, size);  // rejects invalid sizes
  if (samples == 0) throw std::invalid_argument("bench: samples must be at least 1");
  if (workers.empty()) throw std::invalid_argument("bench: at least one worker count is required");
  if (std::find(workers.begin(), workers.end(), 0u) != workers.end()) {
    throw std::invalid_argument("bench: worker counts must be positive");
  }
  if (!std::is_sorted(workers.begin(), workers.end())) {
    throw std::invalid_argument("bench: worker counts must be sorted ascending");
  }
  if (!(timeout.count() > 0.0)) throw std::invalid_argument("bench: timeout must be positive");
}

std::optional<double> CellReport::mean_seconds() const {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& s : samples) {
    if (!s.solved) continue;
    total += s.seconds();
    ++count;
  }
  if (count == 0) return std::nullopt;
  return total / static_cast<double>(count);
}

std::optional<double> CellReport::median_seconds() const {
  std::vector<double> times;
  for (const auto& s : samples) {
    if (s.solved) times.push_back(s.seconds());
  }
  if (times.empty()) return std::nullopt;
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  return times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
}

double CellReport::solve_rate() const {
  if (samples.empty()) return 0.0;
  const auto solved = std::count_if(samples.begin(), samples.end(),
                                    [](const SampleRecord& s) { return s.solved; });
  return static_cast<double>(solved) / static_cast<double>(samples.size());
}

std::size_t CellReport::censored() const {
  return static_cast<std::size_t>(std::count_if(
      samples.begin(), samples.end(), [](const SampleRecord& s) { return !s.solved; }));
}

std::size_t CellReport::timed_out() const {
  return static_cast<std::size_t>(std::count_if(
      samples.begin(), samples.end(), [](const SampleRecord& s) { return s.timed_out; }));
}

const CellReport* RunReport::cell(int size, std::size_t w) const {
  for (const auto& c : cells) {
    if (c.size == size && c.workers == w) return &c;
  }
  return nullptr;
}

std::optional<double> RunReport::speedup(int size, std::size_t w) const {
  if (workers.empty()) return std::nullopt;
  const CellReport* base = cell(size, workers.front());
  const CellReport* target = cell(size, w);
  if (!base || !target) return std::nullopt;
  const auto base_mean = base->mean_seconds();
  const auto target_mean = target->mean_seconds();
  if (!base_mean || !target_mean) return std::nullopt;
  if (w == workers.front()) return 1.0;
  if (*target_mean <= 0.0) return std::nullopt;
  return *base_mean / *target_mean;
}

namespace {

std::string compiler_id() {
#if defined(__clang__)
  return "clang " __clang_version__;
#elif defined(__GNUC__)
  return "gcc " __VERSION__;
#else
  return "unknown";
#endif
}

}  // namespace

RunReport run_benchmark(const RunSpec& spec) {
  spec.validate();

  RunReport report;
  report.problem = spec.problem;
  report.sizes = spec.sizes;
  report.workers = spec.workers;
  report.metadata.seed_base = spec.seed_base;
  report.metadata.samples = spec.samples;
  report.metadata.timeout_seconds = spec.timeout.count();
  report.metadata.hardware_threads = std::thread::hardware_concurrency();
  report.metadata.compiler = compiler_id();

  for (int size : spec.sizes) {
    const SolverParams params = spec.overrides.apply(default_params(spec.problem, size));
    report.metadata.params[size] = params;
    const ModelFactory factory = [&spec, size] { return make_model(spec.problem, size); };
    for (std::size_t w : spec.workers) {
      CellReport cell{size, w, {}};
      cell.samples.reserve(spec.samples);
      for (std::size_t s = 0; s < spec.samples; ++s) {
        MultiWalkOptions options{w, derive_seed(spec.seed_base, s), spec.timeout};
        const SolveOutcome out = multi_walk_solve(factory, params, options);
        SampleRecord rec;
        rec.sample = s;
        rec.millis = static_cast<std::int64_t>(std::llround(out.elapsed.count() * 1000.0));
        rec.solved = out.solved;
        rec.timed_out = !out.solved && out.stop == StopReason::cancelled;
        rec.iterations = out.iterations_total;
        rec.restarts = out.restarts;
        rec.cost = out.cost;
        rec.worker_id = out.worker_id;
        cell.samples.push_back(rec);
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace asearch
