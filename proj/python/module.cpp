#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "edgesched/amdp.hpp"
#include "edgesched/amr2.hpp"
#include "edgesched/baseline.hpp"
#include "edgesched/gen.hpp"
#include "edgesched/io.hpp"
#include "edgesched/oracle.hpp"
#include "edgesched/simplex.hpp"

namespace py = pybind11;
using namespace edgesched;

namespace {

SolveReport exact_wrapper(const Instance& inst, double state_limit) {
  ExactOptions opts;
  opts.state_limit = state_limit;
  return exact_ilp(inst, opts);
}

}  // namespace

PYBIND11_MODULE(edgesched, m) {
  m.doc() = "offload scheduling: LP rounding, identical-jobs DP, greedy baseline, exhaustive search";

  py::register_exception<InfeasibleError>(m, "Infeasible");

  py::class_<Instance>(m, "Instance")
      .def(py::init([](int m_, int n, std::vector<double> accuracies,
                       std::vector<std::vector<double>> times, double T,
                       std::optional<std::vector<double>> comm_times) {
             Instance inst;
             inst.m = m_;
             inst.n = n;
             inst.accuracies = std::move(accuracies);
             inst.times = std::move(times);
             inst.deadline = T;
             inst.comm_times = std::move(comm_times);
             return validate(std::move(inst));
           }),
           py::arg("m"), py::arg("n"), py::arg("accuracies"), py::arg("times"), py::arg("T"),
           py::arg("comm_times") = std::nullopt)
      .def_readonly("m", &Instance::m)
      .def_readonly("n", &Instance::n)
      .def_readonly("accuracies", &Instance::accuracies)
      .def_readonly("times", &Instance::times)
      .def_readonly("comm_times", &Instance::comm_times)
      .def_readonly("T", &Instance::deadline)
      .def("__repr__", [](const Instance& inst) {
        std::ostringstream ss;
        ss << "Instance(m=" << inst.m << ", n=" << inst.n << ", T=" << inst.deadline << ")";
        return ss.str();
      });

  py::class_<Metrics>(m, "Metrics")
      .def_readonly("total_accuracy", &Metrics::total_accuracy)
      .def_readonly("ed_load", &Metrics::ed_load)
      .def_readonly("es_load", &Metrics::es_load)
      .def_readonly("makespan", &Metrics::makespan)
      .def_readonly("violates_deadline", &Metrics::violates_deadline)
      .def_readonly("violation_pct", &Metrics::violation_pct)
      .def("__repr__", [](const Metrics& mt) {
        std::ostringstream ss;
        ss << "Metrics(total_accuracy=" << mt.total_accuracy << ", makespan=" << mt.makespan << ")";
        return ss.str();
      });

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("algorithm", &SolveReport::algorithm)
      .def_property_readonly("assignment",
                             [](const SolveReport& rep) { return rep.schedule.assignment; })
      .def_readonly("metrics", &SolveReport::metrics)
      .def_readonly("fractional_job_count", &SolveReport::fractional_job_count)
      .def_readonly("lp_objective", &SolveReport::lp_objective)
      .def_readonly("runtime_ms", &SolveReport::runtime_ms)
      .def("__repr__", [](const SolveReport& rep) {
        std::ostringstream ss;
        ss << "SolveReport(" << rep.algorithm << ", total_accuracy=" << rep.metrics.total_accuracy
           << ")";
        return ss.str();
      });

  m.def(
      "evaluate",
      [](const Instance& inst, const std::vector<int>& assignment) {
        return evaluate(inst, Schedule{assignment});
      },
      py::arg("instance"), py::arg("assignment"),
      "loads, makespan and accuracy total of a complete assignment (model m is the server)");

  m.def("run_amr2", &run_amr2, py::arg("instance"),
        "LP relaxation plus bounded rounding; makespan at most 2T");
  m.def("run_amdp", &run_amdp, py::arg("instance"), py::arg("delta") = kDefaultDelta,
        "identical-jobs DP; optimal and always within T");
  m.def("run_amdp_hetero", &run_amdp_hetero, py::arg("instance"), py::arg("delta") = kDefaultDelta,
        "identical computation with per-job upload times (requires comm_times)");
  m.def("greedy_rra", &greedy_rra, py::arg("instance"),
        "server prefix, then round-robin devices, rest on model 0");
  m.def("exact_ilp", &exact_wrapper, py::arg("instance"), py::arg("state_limit") = 1e7,
        "exhaustive branch and bound; lexicographically smallest optimum");

  m.def(
      "solve_relaxation",
      [](const Instance& inst) {
        const StandardLp lp = build_relaxation(inst);
        const BasicSolution sol = simplex_solve(lp);
        if (sol.status == LpStatus::Infeasible) {
          throw InfeasibleError(InfeasibleKind::Instance, "Infeasible: the relaxation has no solution");
        }
        return py::make_tuple(sol.objective, fractional_jobs(lp, sol));
      },
      py::arg("instance"), "LP optimum and the fractional job indices of a basic solution");

  m.def(
      "solve_sub_ilp",
      [](const Instance& inst, int job1, int job2) {
        const SubIlpAssignment sub = solve_sub_ilp(inst, job1, job2);
        return py::make_tuple(sub.model_job1, sub.model_job2, sub.accuracy);
      },
      py::arg("instance"), py::arg("job1"), py::arg("job2"),
      "optimal two-job placement under a fresh budget per machine");

  m.def(
      "generate",
      [](const std::string& profile, int n, double T, int m_, std::uint64_t seed) {
        GenParams p;
        p.profile = profile_from_name(profile);
        p.n = n;
        p.m = m_;
        p.deadline = T;
        p.seed = seed;
        return generate(p);
      },
      py::arg("profile"), py::arg("n"), py::arg("T"), py::arg("m") = 2, py::arg("seed") = 0,
      "seeded instance from one of the profiles: table2, monotone_random, identical_random");

  m.def("read_instance", &read_instance, py::arg("path"));
  m.def("write_instance", &write_instance, py::arg("instance"), py::arg("path"));
  m.def("instance_to_json", &instance_to_json, py::arg("instance"));
  m.def("instance_from_json", &instance_from_json, py::arg("text"));
}
