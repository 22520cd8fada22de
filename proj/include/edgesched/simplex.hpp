#pragma once

#include <vector>

#include "edgesched/instance.hpp"

namespace edgesched {

// LP tolerances: kLpEps decides feasibility and integrality questions,
// kPivotEps is the cutoff below which a tableau entry counts as zero.
inline constexpr double kLpEps = 1e-9;
inline constexpr double kPivotEps = 1e-10;

// Equality-form relaxation of the assignment problem.
// Rows: device-time budget (+ slack s1), server-time budget (+ slack s2),
// then one sum-to-one row per job. Columns: x_{ij} at model*n + job for
// model 0..m, then s1, s2. All rhs entries are nonnegative by construction.
struct StandardLp {
  int rows = 0;  // n + 2
  int cols = 0;  // n*(m+1) + 2
  int n = 0;
  int m = 0;
  std::vector<double> objective;            // size cols
  std::vector<std::vector<double>> coeff;   // rows x cols
  std::vector<double> rhs;                  // size rows

  int col(int model, int job) const { return model * n + job; }
  int slack_ed() const { return (m + 1) * n; }
  int slack_es() const { return (m + 1) * n + 1; }
};

enum class LpStatus { Optimal, Infeasible };

struct BasicSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;      // size cols; nonbasic entries exactly 0
  std::vector<int> basis;     // one basic column per row
  double objective = 0.0;
};

StandardLp build_relaxation(const Instance& inst);

// Two-phase dense-tableau simplex with Bland's rule (enter: lowest eligible
// column index; leave: minimum ratio, ties by lowest basic column index).
// Deterministic, anti-cycling; unboundedness cannot occur for these LPs and
// is reported as std::logic_error.
BasicSolution simplex_solve(const StandardLp& lp);

// Jobs whose mass is split across models: some x_{ij} lies strictly inside
// (kLpEps, 1 - kLpEps). Ascending job indices. A basic optimum has at most
// two of these; more than two means a solver defect, reported as logic_error
// by run_amr2.
std::vector<int> fractional_jobs(const StandardLp& lp, const BasicSolution& sol);

}  // namespace edgesched
