// Command-line front end: `solve` runs one multi-walk search and prints the
// certificate, `bench` runs the sampling harness and prints a report.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asearch/harness.hpp"
#include "asearch/models.hpp"
#include "asearch/parallel.hpp"
#include "asearch/report.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnsolved = 2;

// Unset flags keep the per-problem defaults (see default_params).
void add_param_flags(CLI::App& cmd, asearch::ParamOverrides& o) {
  cmd.add_option("--tenure", o.tenure, "Tabu tenure T")->check(CLI::PositiveNumber);
  cmd.add_option("--reset-limit", o.reset_limit, "Frozen variables triggering a reset, RL")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--max-iter", o.max_iterations, "Iterations per restart, MI (default 100 n^2)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--max-restarts", o.max_restarts, "Descents in total, MR (default 100)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--reset-fraction", o.reset_fraction,
                 "Share of variables disturbed by a partial reset");
  cmd.add_option("--escape", o.escape_percent,
                 "Percent chance of leaving a local minimum by its best exchange")
      ->check(CLI::Range(0, 100));
}

void print_outcome(std::ostream& out, const asearch::ProblemModel& model, std::size_t workers,
                   std::uint64_t seed, const asearch::SolveOutcome& o) {
  out << "problem: " << model.name() << '\n'
      << "size: " << model.order() << '\n'
      << "workers: " << workers << '\n'
      << "seed: " << seed << '\n'
      << "solved: " << (o.solved ? "yes" : "no") << '\n'
      << "stop: " << asearch::to_string(o.stop) << '\n'
      << "cost: " << o.cost << '\n'
      << "iterations: " << o.iterations_total << '\n'
      << "restarts: " << o.restarts << '\n'
      << "worker: " << (o.worker_id ? std::to_string(*o.worker_id) : "-") << '\n';
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", o.elapsed.count());
  out << "elapsed: " << elapsed << " s\n";
  out << "verified: " << (model.verify(o.solution.values()) ? "yes" : "no") << '\n';
  out << "certificate:";
  for (auto v : o.solution.values()) out << ' ' << v;
  out << '\n';
  if (model.name() == "magic-square") {
    const auto side = static_cast<std::size_t>(model.order());
    for (std::size_t r = 0; r < side; ++r) {
      for (std::size_t c = 0; c < side; ++c) {
        out << (c == 0 ? "  " : " ") << o.solution[r * side + c];
      }
      out << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive Search solver for permutation CSPs"};
  app.require_subcommand(1);

  std::string problem;
  int size = 0;
  std::size_t workers = asearch::default_worker_count();
  std::uint64_t seed = 1;
  std::optional<double> solve_timeout;
  asearch::ParamOverrides solve_overrides;

  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance and print the certificate");
  solve_cmd->add_option("problem", problem, "magic-square | all-interval | partition | costas")
      ->required();
  solve_cmd->add_option("--size", size, "Instance size (side length for magic-square)")
      ->required();
  solve_cmd->add_option("--workers", workers, "Independent walks (default: hardware threads)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", seed, "Seed base (default 1)");
  solve_cmd->add_option("--timeout", solve_timeout, "Wall-clock limit in seconds")
      ->check(CLI::PositiveNumber);
  add_param_flags(*solve_cmd, solve_overrides);

  asearch::RunSpec spec;
  std::string format = "table";
  std::string out_path;
  double bench_timeout = 120.0;
  auto* bench_cmd = app.add_subcommand("bench", "Sample solve times over sizes and worker counts");
  bench_cmd->add_option("problem", spec.problem, "magic-square | all-interval | partition | costas")
      ->required();
  bench_cmd->add_option("--sizes", spec.sizes, "Comma-separated instance sizes")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--workers", spec.workers, "Comma-separated worker counts, ascending")
      ->delimiter(',');
  bench_cmd->add_option("--samples", spec.samples, "Samples per cell (default 100)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", format, "table | csv | structured (default table)");
  bench_cmd->add_option("--out", out_path, "Write the report to FILE instead of stdout");
  bench_cmd->add_option("--timeout", bench_timeout, "Per-sample limit in seconds (default 120)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", spec.seed_base, "Seed base (default 1)");
  add_param_flags(*bench_cmd, spec.overrides);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) {
      auto model = asearch::make_model(problem, size);
      const asearch::SolverParams params =
          solve_overrides.apply(asearch::default_params(problem, size));
      params.validate();
      asearch::MultiWalkOptions options{workers, seed, std::nullopt};
      if (solve_timeout) options.timeout = std::chrono::duration<double>(*solve_timeout);
      const asearch::ModelFactory factory = [&] { return model->clone(); };
      const auto outcome = asearch::multi_walk_solve(factory, params, options);
      print_outcome(std::cout, *model, workers, seed, outcome);
      return outcome.solved ? kExitSolved : kExitUnsolved;
    }

    const auto report_format = asearch::parse_report_format(format);
    spec.timeout = std::chrono::duration<double>(bench_timeout);
    spec.validate();
    spec.overrides.apply(asearch::default_params(spec.problem, spec.sizes.front())).validate();
    const auto report = asearch::run_benchmark(spec);
    const std::string text = asearch::emit_report(report, report_format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
      file << text;
    }
    return kExitSolved;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
