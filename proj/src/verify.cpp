#include "edgesched/verify.hpp"

#include <cmath>

#include "edgesched/amdp.hpp"
#include "edgesched/amr2.hpp"
#include "edgesched/gen.hpp"
#include "edgesched/oracle.hpp"
#include "edgesched/simplex.hpp"

namespace edgesched {

Instance monotone_probe_instance(std::uint64_t k) {
  SplitMix64 meta(k);
  GenParams p;
  p.profile = Profile::MonotoneRandom;
  p.n = meta.uniform_int(2, 30);
  p.m = meta.uniform_int(1, 5);
  const double tightness = meta.uniform(0.6, 1.5);
  p.seed = meta.next();
  p.deadline = 1.0;  // placeholder until the draw below
  Instance inst = generate(p);
  // balance point of an all-fastest-device vs all-server fractional split;
  // budgets above it are always feasible, below it often not
  double fastest = 0.0, server = 0.0;
  for (int j = 0; j < inst.n; ++j) {
    fastest += inst.times[0][static_cast<size_t>(j)];
    server += inst.es_time(j);
  }
  const double balanced = fastest * server / (fastest + server);
  inst.deadline = tightness * balanced;
  return validate(std::move(inst));
}

Instance identical_probe_instance(std::uint64_t k) {
  SplitMix64 meta(k);
  GenParams p;
  p.profile = Profile::IdenticalRandom;
  p.n = meta.uniform_int(2, 8);
  p.m = meta.uniform_int(1, 3);
  const double tightness = meta.uniform(0.15, 1.1);
  p.seed = meta.next();
  p.deadline = 1.0;
  Instance inst = generate(p);
  const double raw = tightness * static_cast<double>(inst.n) * inst.es_time(0);
  // keep the budget on the same millisecond grid as the times
  inst.deadline = std::max(1.0, std::round(raw * 1000.0)) / 1000.0;
  return validate(std::move(inst));
}

std::vector<VerifySuiteResult> run_verify(int seeds) {
  VerifySuiteResult fractional{"fractional_count", "basic optima split at most two jobs", 0, 0};
  VerifySuiteResult makespan{"makespan_bound", "rounded schedules finish within twice the budget", 0, 0};
  VerifySuiteResult gap{"accuracy_gap", "rounding loses at most two model-accuracy spans", 0, 0};
  VerifySuiteResult dp{"dp_optimality", "identical-jobs schedules match the exhaustive optimum", 0, 0};

  for (int k = 0; k < seeds; ++k) {
    const Instance inst = monotone_probe_instance(static_cast<std::uint64_t>(k));
    const StandardLp lp = build_relaxation(inst);
    const BasicSolution sol = simplex_solve(lp);
    fractional.runs++;
    makespan.runs++;
    gap.runs++;
    if (sol.status == LpStatus::Infeasible) {
      // nothing to round; the invariants hold vacuously
      fractional.passes++;
      makespan.passes++;
      gap.passes++;
      continue;
    }
    const size_t frac = fractional_jobs(lp, sol).size();
    if (frac <= 2) fractional.passes++;
    bool rounded_ok = true;
    bool gap_ok = true;
    try {
      const SolveReport rep = run_amr2(inst);
      rounded_ok = rep.metrics.makespan <= 2.0 * inst.deadline + kFeasEps;
      gap_ok = *rep.lp_objective - rep.metrics.total_accuracy <= 2.0 * inst.accuracy_span() + kFeasEps;
    } catch (const InfeasibleError&) {
      // leftover jobs can fit nowhere; the bounds hold vacuously
    }
    if (rounded_ok) makespan.passes++;
    if (gap_ok) gap.passes++;
  }

  for (int k = 0; k < seeds; ++k) {
    const Instance inst = identical_probe_instance(static_cast<std::uint64_t>(k));
    dp.runs++;
    bool dp_feasible = true;
    bool exact_feasible = true;
    double dp_value = 0.0, exact_value = 0.0, dp_makespan = 0.0;
    try {
      const SolveReport rep = run_amdp(inst);
      dp_value = rep.metrics.total_accuracy;
      dp_makespan = rep.metrics.makespan;
    } catch (const InfeasibleError&) {
      dp_feasible = false;
    }
    try {
      exact_value = exact_ilp(inst).metrics.total_accuracy;
    } catch (const InfeasibleError&) {
      exact_feasible = false;
    }
    if (dp_feasible != exact_feasible) continue;
    if (dp_feasible && (dp_value != exact_value || dp_makespan > inst.deadline + kFeasEps)) continue;
    dp.passes++;
  }

  return {fractional, makespan, gap, dp};
}

}  // namespace edgesched
