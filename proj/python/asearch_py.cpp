#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asearch/configuration.hpp"
#include "asearch/harness.hpp"
#include "asearch/models.hpp"
#include "asearch/parallel.hpp"
#include "asearch/random.hpp"
#include "asearch/report.hpp"
#include "asearch/solver.hpp"

namespace py = pybind11;

namespace {

using Values = std::vector<asearch::Value>;

asearch::SolveOutcome solve_one(const std::string& problem, int size,
                                std::optional<asearch::SolverParams> params, std::uint64_t seed) {
  auto model = asearch::make_model(problem, size);
  asearch::SolverParams p = params ? *params : asearch::default_params(problem, size);
  p.seed = seed;
  py::gil_scoped_release release;
  return asearch::solve(*model, p);
}

asearch::SolveOutcome multi_walk(const std::string& problem, int size, std::size_t workers,
                                 std::uint64_t seed_base,
                                 std::optional<asearch::SolverParams> params,
                                 std::optional<double> timeout) {
  const asearch::SolverParams p = params ? *params : asearch::default_params(problem, size);
  asearch::MultiWalkOptions options{workers, seed_base, std::nullopt};
  if (timeout) options.timeout = std::chrono::duration<double>(*timeout);
  const asearch::ModelFactory factory = [&] { return asearch::make_model(problem, size); };
  py::gil_scoped_release release;
  return asearch::multi_walk_solve(factory, p, options);
}

std::string bench(const std::string& problem, const std::vector<int>& sizes,
                  const std::vector<std::size_t>& workers, std::size_t samples,
                  const std::string& format, std::uint64_t seed_base, double timeout) {
  asearch::RunSpec spec;
  spec.problem = problem;
  spec.sizes = sizes;
  spec.workers = workers;
  spec.samples = samples;
  spec.seed_base = seed_base;
  spec.timeout = std::chrono::duration<double>(timeout);
  const auto fmt = asearch::parse_report_format(format);
  asearch::RunReport report;
  {
    py::gil_scoped_release release;
    report = asearch::run_benchmark(spec);
  }
  return asearch::emit_report(report, fmt);
}

}  // namespace

PYBIND11_MODULE(_asearch, m) {
  m.doc() = "Adaptive Search local-search solver for permutation CSPs";
  m.attr("__version__") = "0.1.0";

  py::class_<asearch::ProblemModel, std::shared_ptr<asearch::ProblemModel>>(m, "Model")
      .def_property_readonly("name", [](const asearch::ProblemModel& self) {
        return std::string(self.name());
      })
      .def_property_readonly("order", &asearch::ProblemModel::order)
      .def_property_readonly("size", &asearch::ProblemModel::size)
      .def("base_domain", &asearch::ProblemModel::base_domain)
      .def("cost_of_solution",
           [](const asearch::ProblemModel& self, const Values& c) { return self.cost_of_solution(c); })
      .def("cost_on_variable",
           [](const asearch::ProblemModel& self, const Values& c, std::size_t i) {
             return self.cost_on_variable(c, i);
           })
      .def("cost_if_swap",
           [](const asearch::ProblemModel& self, const Values& c, asearch::Cost current,
              std::size_t i, std::size_t j) { return self.cost_if_swap(c, current, i, j); })
      .def("verify", [](const asearch::ProblemModel& self, const Values& c) { return self.verify(c); });

  m.def("model_names", &asearch::model_names);
  m.def(
      "make_model",
      [](const std::string& name, int size) {
        return std::shared_ptr<asearch::ProblemModel>(asearch::make_model(name, size));
      },
      py::arg("name"), py::arg("size"));

  py::class_<asearch::SolverParams>(m, "SolverParams")
      .def(py::init<>())
      .def_readwrite("tenure", &asearch::SolverParams::tenure)
      .def_readwrite("reset_limit", &asearch::SolverParams::reset_limit)
      .def_readwrite("max_iterations", &asearch::SolverParams::max_iterations)
      .def_readwrite("max_restarts", &asearch::SolverParams::max_restarts)
      .def_readwrite("reset_fraction", &asearch::SolverParams::reset_fraction)
      .def_readwrite("escape_percent", &asearch::SolverParams::escape_percent)
      .def_readwrite("seed", &asearch::SolverParams::seed)
      .def("validate", &asearch::SolverParams::validate)
      .def("__repr__", [](const asearch::SolverParams& p) {
        return "SolverParams(tenure=" + std::to_string(p.tenure) +
               ", reset_limit=" + std::to_string(p.reset_limit) +
               ", max_iterations=" + std::to_string(p.max_iterations) +
               ", max_restarts=" + std::to_string(p.max_restarts) +
               ", reset_fraction=" + std::to_string(p.reset_fraction) +
               ", escape_percent=" + std::to_string(p.escape_percent) +
               ", seed=" + std::to_string(p.seed) + ")";
      });

  py::class_<asearch::SolveOutcome>(m, "SolveOutcome")
      .def_property_readonly("solution",
                             [](const asearch::SolveOutcome& o) {
                               const auto v = o.solution.values();
                               return Values(v.begin(), v.end());
                             })
      .def_readonly("cost", &asearch::SolveOutcome::cost)
      .def_readonly("iterations_total", &asearch::SolveOutcome::iterations_total)
      .def_readonly("restarts", &asearch::SolveOutcome::restarts)
      .def_readonly("solved", &asearch::SolveOutcome::solved)
      .def_readonly("worker_id", &asearch::SolveOutcome::worker_id)
      .def_property_readonly("elapsed",
                             [](const asearch::SolveOutcome& o) { return o.elapsed.count(); })
      .def_property_readonly("stop", [](const asearch::SolveOutcome& o) {
        return std::string(asearch::to_string(o.stop));
      });

  m.def("default_params", &asearch::default_params, py::arg("problem"), py::arg("size"));
  m.def("derive_seed", &asearch::derive_seed, py::arg("seed_base"), py::arg("worker_id"));
  m.def(
      "random_permutation",
      [](std::size_t n, std::uint64_t seed) {
        asearch::RandomSource rng(seed);
        const auto c = asearch::random_permutation(n, rng);
        return Values(c.values().begin(), c.values().end());
      },
      py::arg("n"), py::arg("seed"));
  m.def("solve", &solve_one, py::arg("problem"), py::arg("size"), py::arg("params") = py::none(),
        py::arg("seed") = 1);
  m.def("multi_walk_solve", &multi_walk, py::arg("problem"), py::arg("size"),
        py::arg("workers") = 1, py::arg("seed_base") = 1, py::arg("params") = py::none(),
        py::arg("timeout") = py::none());
  m.def("run_benchmark", &bench, py::arg("problem"), py::arg("sizes"), py::arg("workers"),
        py::arg("samples") = 1, py::arg("format") = "structured", py::arg("seed_base") = 1,
        py::arg("timeout") = 120.0);
}
