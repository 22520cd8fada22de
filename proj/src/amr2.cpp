#include "edgesched/amr2.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace edgesched {

namespace {

// Best device-only accuracy for one job under a fresh budget; -1 if no
// device model fits. Ties go to the smallest model index.
int best_device_model(const Instance& inst, int job) {
  int best = -1;
  for (int i = 0; i < inst.m; ++i) {
    if (inst.times[static_cast<size_t>(i)][static_cast<size_t>(job)] > inst.deadline + kFeasEps) continue;
    if (best < 0 || inst.accuracies[static_cast<size_t>(i)] > inst.accuracies[static_cast<size_t>(best)]) {
      best = i;
    }
  }
  return best;
}

}  // namespace

SubIlpAssignment solve_sub_ilp(const Instance& inst, int job1, int job2) {
  if (job1 < 0 || job2 < 0 || job1 >= inst.n || job2 >= inst.n || job1 == job2) {
    throw ValidationError(ValidationIssue::IndexOutOfRange,
                          "IndexOutOfRange: sub-ILP needs two distinct valid job indices");
  }
  const double T = inst.deadline;
  const double a_es = inst.accuracies[static_cast<size_t>(inst.m)];
  const double es1 = inst.es_time(job1);
  const double es2 = inst.es_time(job2);
  SubIlpAssignment out;

  if (es1 + es2 <= T + kFeasEps) {
    out.model_job1 = inst.m;
    out.model_job2 = inst.m;
    out.accuracy = a_es + a_es;
    return out;
  }

  const bool fits1 = es1 <= T + kFeasEps;
  const bool fits2 = es2 <= T + kFeasEps;
  if (fits1 || fits2) {
    const int ed1 = best_device_model(inst, job1);
    const int ed2 = best_device_model(inst, job2);
    // branch A keeps job 1 on a device, branch B keeps job 2 there
    const bool cand_a = ed1 >= 0 && fits2;
    const bool cand_b = ed2 >= 0 && fits1;
    bool pick_a;
    if (cand_a && cand_b) {
      // equal best device accuracies keep job 1 on the device
      pick_a = inst.accuracies[static_cast<size_t>(ed1)] >= inst.accuracies[static_cast<size_t>(ed2)];
    } else if (cand_a || cand_b) {
      pick_a = cand_a;
    } else {
      throw InfeasibleError(InfeasibleKind::SubIlp,
                            "Infeasible: neither leftover job can be placed within the budget");
    }
    if (pick_a) {
      out.model_job1 = ed1;
      out.model_job2 = inst.m;
      out.accuracy = inst.accuracies[static_cast<size_t>(ed1)] + a_es;
    } else {
      out.model_job1 = inst.m;
      out.model_job2 = ed2;
      out.accuracy = a_es + inst.accuracies[static_cast<size_t>(ed2)];
    }
    return out;
  }

  // both jobs are stuck on devices; try every ordered pair, same model allowed
  double best = -1.0;
  for (int i1 = 0; i1 < inst.m; ++i1) {
    for (int i2 = 0; i2 < inst.m; ++i2) {
      const double load = inst.times[static_cast<size_t>(i1)][static_cast<size_t>(job1)] +
                          inst.times[static_cast<size_t>(i2)][static_cast<size_t>(job2)];
      if (load > T + kFeasEps) continue;
      const double acc = inst.accuracies[static_cast<size_t>(i1)] + inst.accuracies[static_cast<size_t>(i2)];
      if (acc > best) {  // strict: ties keep the lexicographically first pair
        best = acc;
        out.model_job1 = i1;
        out.model_job2 = i2;
      }
    }
  }
  if (best < 0.0) {
    throw InfeasibleError(InfeasibleKind::SubIlp,
                          "Infeasible: no device pair fits the two leftover jobs");
  }
  out.accuracy = best;
  return out;
}

SolveReport run_amr2(const Instance& inst) {
  const auto t0 = std::chrono::steady_clock::now();
  const StandardLp lp = build_relaxation(inst);
  const BasicSolution sol = simplex_solve(lp);
  if (sol.status == LpStatus::Infeasible) {
    throw InfeasibleError(InfeasibleKind::Instance, "Infeasible: the relaxation has no solution");
  }
  const std::vector<int> frac = fractional_jobs(lp, sol);
  if (frac.size() > 2) {
    throw std::logic_error("rounding: a basic optimum split more than two jobs");
  }

  SolveReport rep;
  rep.algorithm = "amr2";
  rep.lp_objective = sol.objective;
  rep.fractional_job_count = static_cast<int>(frac.size());
  rep.schedule.assignment.assign(static_cast<size_t>(inst.n), -1);

  for (int j = 0; j < inst.n; ++j) {
    bool is_frac = false;
    for (int f : frac) is_frac |= (f == j);
    if (is_frac) continue;
    int pick = -1;
    double mass = -1.0;
    for (int i = 0; i <= inst.m; ++i) {
      const double v = sol.x[static_cast<size_t>(lp.col(i, j))];
      if (v > mass) {
        mass = v;
        pick = i;
      }
    }
    if (mass < 1.0 - kLpEps) {
      throw std::logic_error("rounding: integral job without a unit entry");
    }
    rep.schedule.assignment[static_cast<size_t>(j)] = pick;
  }

  if (frac.size() == 1) {
    // one leftover job: best model that fits it alone, server included
    const int j = frac[0];
    int pick = -1;
    for (int i = 0; i <= inst.m; ++i) {
      if (inst.times[static_cast<size_t>(i)][static_cast<size_t>(j)] > inst.deadline + kFeasEps) continue;
      if (pick < 0 || inst.accuracies[static_cast<size_t>(i)] > inst.accuracies[static_cast<size_t>(pick)]) {
        pick = i;
      }
    }
    if (pick < 0) {
      throw InfeasibleError(InfeasibleKind::Instance,
                            "Infeasible: the fractional job fits no model within the budget");
    }
    rep.schedule.assignment[static_cast<size_t>(j)] = pick;
  } else if (frac.size() == 2) {
    const SubIlpAssignment sub = solve_sub_ilp(inst, frac[0], frac[1]);
    rep.schedule.assignment[static_cast<size_t>(frac[0])] = sub.model_job1;
    rep.schedule.assignment[static_cast<size_t>(frac[1])] = sub.model_job2;
  }

  rep.metrics = evaluate(inst, rep.schedule);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace edgesched
