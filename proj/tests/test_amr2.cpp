#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "edgesched/amr2.hpp"
#include "edgesched/gen.hpp"
#include "edgesched/oracle.hpp"
#include "edgesched/simplex.hpp"
#include "edgesched/verify.hpp"
#include "helpers.hpp"

using namespace edgesched;

namespace {

Instance pair_instance(std::vector<double> es_times, double T) {
  return th::make_instance(2, 2, {0.4, 0.6, 0.8},
                           {{0.1, 0.1}, {0.2, 0.3}, std::move(es_times)}, T);
}

}  // namespace

TEST_CASE("sub-ilp worked examples") {
  // roomy budget: both jobs share the server
  const SubIlpAssignment both = solve_sub_ilp(pair_instance({0.5, 0.5}, 1.0), 0, 1);
  CHECK(both.model_job1 == 2);
  CHECK(both.model_job2 == 2);
  CHECK(both.accuracy == doctest::Approx(1.6));

  // server only fits one; equal device accuracies keep job 1 local
  const SubIlpAssignment split = solve_sub_ilp(pair_instance({0.5, 0.5}, 0.6), 0, 1);
  CHECK(split.model_job1 == 1);
  CHECK(split.model_job2 == 2);
  CHECK(split.accuracy == doctest::Approx(1.4));

  // server fits neither; the best device pair shares the budget
  const SubIlpAssignment local = solve_sub_ilp(pair_instance({0.7, 0.7}, 0.6), 0, 1);
  CHECK(local.model_job1 == 1);
  CHECK(local.model_job2 == 1);
  CHECK(local.accuracy == doctest::Approx(1.2));
}

TEST_CASE("sub-ilp swaps branches when the favored job cannot reach the server") {
  // job 1 fits nowhere locally but fits the server; job 2 is the opposite
  const Instance inst =
      th::make_instance(1, 2, {0.5, 1.0}, {{1.5, 0.4}, {0.8, 1.0}}, 0.9);
  const SubIlpAssignment out = solve_sub_ilp(inst, 0, 1);
  CHECK(out.model_job1 == 1);
  CHECK(out.model_job2 == 0);
  CHECK(out.accuracy == doctest::Approx(1.5));
}

TEST_CASE("sub-ilp rejects bad job indices") {
  const Instance inst = pair_instance({0.5, 0.5}, 1.0);
  CHECK_THROWS_AS(solve_sub_ilp(inst, 0, 0), ValidationError);
  CHECK_THROWS_AS(solve_sub_ilp(inst, 0, 2), ValidationError);
  CHECK_THROWS_AS(solve_sub_ilp(inst, -1, 1), ValidationError);
}

TEST_CASE("sub-ilp infeasible when nothing fits") {
  const Instance inst = th::make_instance(1, 2, {0.5, 1.0}, {{0.6, 0.6}, {1.0, 1.0}}, 0.9);
  CHECK_THROWS_AS(solve_sub_ilp(inst, 0, 1), InfeasibleError);
  try {
    solve_sub_ilp(inst, 0, 1);
  } catch (const InfeasibleError& e) {
    CHECK(e.kind() == InfeasibleKind::SubIlp);
  }
}

TEST_CASE("sub-ilp matches brute force on random pairs") {
  for (std::uint64_t k = 0; k < 400; ++k) {
    SplitMix64 meta(k + 555);
    GenParams p;
    p.profile = Profile::MonotoneRandom;
    p.n = meta.uniform_int(2, 6);
    p.m = meta.uniform_int(1, 4);
    p.seed = meta.next();
    p.deadline = meta.uniform(0.2, 1.6);
    const Instance inst = generate(p);
    const int j1 = meta.uniform_int(0, inst.n - 1);
    int j2 = meta.uniform_int(0, inst.n - 2);
    if (j2 >= j1) ++j2;
    const auto brute = th::brute_sub_ilp(inst, j1, j2);
    if (!brute.has_value()) {
      CHECK_THROWS_AS(solve_sub_ilp(inst, j1, j2), InfeasibleError);
      continue;
    }
    const SubIlpAssignment out = solve_sub_ilp(inst, j1, j2);
    CHECK(out.accuracy == doctest::Approx(brute->accuracy).epsilon(1e-12));
    // the returned placement really is feasible under fresh budgets
    double ed = 0.0, es = 0.0;
    (out.model_job1 == inst.m ? es : ed) +=
        inst.times[static_cast<size_t>(out.model_job1)][static_cast<size_t>(j1)];
    (out.model_job2 == inst.m ? es : ed) +=
        inst.times[static_cast<size_t>(out.model_job2)][static_cast<size_t>(j2)];
    CHECK(ed <= inst.deadline + kFeasEps);
    CHECK(es <= inst.deadline + kFeasEps);
  }
}

TEST_CASE("pipeline regression on the two-job split") {
  const Instance inst = th::make_instance(1, 2, {0.5, 1.0}, {{0.6, 0.6}, {0.6, 0.6}}, 0.9);
  const SolveReport rep = run_amr2(inst);
  REQUIRE(rep.lp_objective.has_value());
  CHECK(*rep.lp_objective == doctest::Approx(1.75).epsilon(1e-12));
  CHECK(rep.fractional_job_count == 1);
  // the split job rounds to the server, stacking both jobs there
  CHECK(rep.metrics.total_accuracy == doctest::Approx(2.0));
  CHECK(rep.metrics.es_load == doctest::Approx(1.2));
  CHECK(rep.metrics.makespan == doctest::Approx(1.2));
  CHECK(rep.metrics.violates_deadline);
  CHECK(rep.metrics.violation_pct == doctest::Approx(100.0 / 3.0));
  CHECK(rep.metrics.makespan <= 2.0 * inst.deadline + kFeasEps);
  CHECK(rep.schedule.assignment == std::vector<int>{1, 1});
}

TEST_CASE("pipeline keeps a forced device placement") {
  // the server model is far too slow to host a whole job, so integral
  // optimum puts both jobs on the device; the relaxation still shaves a
  // sliver of server mass (10 f <= 0.8 allows f = 0.08), which rounding
  // discards again
  const Instance inst = th::make_instance(1, 2, {0.5, 1.0}, {{0.4, 0.4}, {10.0, 10.0}}, 0.8);
  const SolveReport rep = run_amr2(inst);
  REQUIRE(rep.lp_objective.has_value());
  CHECK(*rep.lp_objective == doctest::Approx(1.04));
  CHECK(rep.metrics.total_accuracy == doctest::Approx(1.0));
  CHECK(rep.metrics.makespan == doctest::Approx(0.8));
  CHECK_FALSE(rep.metrics.violates_deadline);
  CHECK(rep.schedule.assignment == std::vector<int>{0, 0});
}

TEST_CASE("pipeline infeasibility") {
  // triple-budget times on both machines leave the relaxation empty
  CHECK_THROWS_AS(run_amr2(th::make_instance(1, 1, {0.5, 1.0}, {{2.7}, {2.7}}, 0.9)),
                  InfeasibleError);
  // feasible relaxation (the job can split 2/3 + 1/3) but no single
  // model fits the whole job, so rounding has nowhere to put it
  const Instance split_only = th::make_instance(1, 1, {0.5, 1.0}, {{1.35}, {1.35}}, 0.9);
  CHECK(simplex_solve(build_relaxation(split_only)).status == LpStatus::Optimal);
  CHECK_THROWS_AS(run_amr2(split_only), InfeasibleError);
}

TEST_CASE("guaranteed bounds hold across the probe corpus") {
  int solved = 0;
  for (std::uint64_t k = 0; k < 150; ++k) {
    const Instance inst = monotone_probe_instance(k);
    SolveReport rep;
    try {
      rep = run_amr2(inst);
    } catch (const InfeasibleError&) {
      continue;
    }
    ++solved;
    REQUIRE(rep.lp_objective.has_value());
    CHECK(rep.fractional_job_count <= 2);
    CHECK(rep.metrics.makespan <= 2.0 * inst.deadline + kFeasEps);
    CHECK(*rep.lp_objective - rep.metrics.total_accuracy <=
          2.0 * inst.accuracy_span() + kFeasEps);

    // jobs the relaxation already settled keep their model
    const StandardLp lp = build_relaxation(inst);
    const BasicSolution sol = simplex_solve(lp);
    const std::vector<int> frac = fractional_jobs(lp, sol);
    for (int j = 0; j < inst.n; ++j) {
      if (std::find(frac.begin(), frac.end(), j) != frac.end()) continue;
      const int picked = rep.schedule.assignment[static_cast<size_t>(j)];
      CHECK(sol.x[static_cast<size_t>(lp.col(picked, j))] ==
            doctest::Approx(1.0).epsilon(1e-7));
    }
  }
  CHECK(solved > 75);
}

TEST_CASE("small-time instances stay within one accuracy step of the optimum") {
  int solved = 0;
  for (std::uint64_t k = 0; k < 40; ++k) {
    SplitMix64 meta(k + 777);
    GenParams p;
    p.profile = Profile::MonotoneRandom;
    p.n = meta.uniform_int(2, 8);
    p.m = meta.uniform_int(1, 3);
    p.seed = meta.next();
    p.deadline = 1.0;
    Instance inst = generate(p);
    double max_time = 0.0;
    for (const auto& row : inst.times) {
      for (double v : row) max_time = std::max(max_time, v);
    }
    // stretch the budget so every single placement fits on its own
    inst = th::make_instance(inst.m, inst.n, inst.accuracies, inst.times,
                             max_time * meta.uniform(1.2, 3.0));
    SolveReport approx;
    SolveReport exact;
    try {
      exact = exact_ilp(inst);
      approx = run_amr2(inst);
    } catch (const InfeasibleError&) {
      continue;  // budgets can still clash when everything must run somewhere
    }
    ++solved;
    CHECK(exact.metrics.total_accuracy - approx.metrics.total_accuracy <=
          inst.accuracy_span() + kFeasEps);
  }
  CHECK(solved > 20);
}
