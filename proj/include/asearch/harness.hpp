#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asearch/solver.hpp"

namespace asearch {

/// Optional per-field overrides on top of the per-benchmark defaults.
struct ParamOverrides {
  std::optional<std::uint64_t> tenure;
  std::optional<std::uint64_t> reset_limit;
  std::optional<std::uint64_t> max_iterations;
  std::optional<std::uint64_t> max_restarts;
  std::optional<double> reset_fraction;
  std::optional<std::uint32_t> escape_percent;

  SolverParams apply(SolverParams params) const;
};

/// Default parameters for `problem` at instance size `size`:
/// T = 10, RL = max(2, ceil(n/10)), reset fraction 0.1, MI = 100 n^2,
/// MR = 100, where n is the number of variables.
SolverParams default_params(const std::string& problem, int size);

struct RunSpec {
  std::string problem;
  std::vector<int> sizes;
  std::size_t samples = 100;
  /// Ascending; the first entry is the speed-up baseline.
  std::vector<std::size_t> workers{1, 2, 4, 6, 8};
  ParamOverrides overrides;
  std::uint64_t seed_base = 1;
  std::chrono::duration<double> timeout{120.0};

  /// Throws std::invalid_argument on an unknown problem, no sizes, zero
  /// samples, a zero or unsorted worker list, or a non-positive timeout.
  void validate() const;
};

struct SampleRecord {
  std::size_t sample = 0;
  /// Wall time in whole milliseconds.
  std::int64_t millis = 0;
  bool solved = false;
  bool timed_out = false;
  std::uint64_t iterations = 0;
  std::uint64_t restarts = 0;
  Cost cost = 0;
  std::optional<std::size_t> worker_id;

  double seconds() const noexcept { return static_cast<double>(millis) / 1000.0; }

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct CellReport {
  int size = 0;
  std::size_t workers = 0;
  std::vector<SampleRecord> samples;

  /// Mean over solved samples; empty when none solved.
  std::optional<double> mean_seconds() const;
  std::optional<double> median_seconds() const;
  double solve_rate() const;
  /// Samples left out of the mean.
  std::size_t censored() const;
  std::size_t timed_out() const;

  friend bool operator==(const CellReport&, const CellReport&) = default;
};

struct RunMetadata {
  std::uint64_t seed_base = 0;
  std::size_t samples = 0;
  double timeout_seconds = 0.0;
  /// Resolved solver parameters per instance size (seed field unused).
  std::map<int, SolverParams> params;
  unsigned hardware_threads = 0;
  std::string compiler;

  friend bool operator==(const RunMetadata&, const RunMetadata&) = default;
};

struct RunReport {
  std::string problem;
  std::vector<int> sizes;
  std::vector<std::size_t> workers;
  std::vector<CellReport> cells;
  RunMetadata metadata;

  const CellReport* cell(int size, std::size_t workers) const;
  /// mean(size, baseline) / mean(size, workers); empty when either mean is.
  std::optional<double> speedup(int size, std::size_t workers) const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Runs samples x sizes x worker counts multi-walk solves, one at a time.
/// Sample s of every cell uses seed base derive_seed(spec.seed_base, s).
RunReport run_benchmark(const RunSpec& spec);

}  // namespace asearch
