#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgesched/errors.hpp"

namespace edgesched {

// Feasibility comparisons throughout the library allow this much slack, so
// decimal inputs (e.g. millisecond grids) survive binary-float round trips.
inline constexpr double kFeasEps = 1e-9;

// One scheduling problem: n jobs, m device models plus one server model.
// Model indices are 0-based everywhere in code; index m is the server.
// times[i][j] is the full processing time of job j on model i; for the server
// row that already includes the upload time, which comm_times (if present)
// breaks out separately.
struct Instance {
  int m = 0;  // device model count; model m is the server
  int n = 0;
  std::vector<double> accuracies;          // size m+1, nondecreasing
  std::vector<std::vector<double>> times;  // (m+1) rows of n entries
  std::optional<std::vector<double>> comm_times;  // size n when present
  double deadline = 0.0;                   // budget T, per machine

  int model_count() const { return m + 1; }
  double es_time(int job) const { return times[static_cast<size_t>(m)][static_cast<size_t>(job)]; }
  double accuracy_span() const { return accuracies[static_cast<size_t>(m)] - accuracies[0]; }
};

// assignment[j] in [0, m]; m means the job runs on the server.
struct Schedule {
  std::vector<int> assignment;
};

struct Metrics {
  double total_accuracy = 0.0;
  double ed_load = 0.0;
  double es_load = 0.0;
  double makespan = 0.0;
  bool violates_deadline = false;
  double violation_pct = 0.0;  // 100 * max(0, makespan - T) / T
};

struct SolveReport {
  std::string algorithm;
  Schedule schedule;
  Metrics metrics;
  int fractional_job_count = 0;              // meaningful for the LP path only
  std::optional<double> lp_objective;        // set when an LP was solved
  double runtime_ms = 0.0;
};

// Checks shapes, positivity, accuracy monotonicity and comm bounds.
// Returns the instance unchanged on success.
Instance validate(Instance inst);

// Loads, makespan and accuracy total for a complete assignment.
// Accuracy is summed per model (count * accuracy, ascending model index) so
// schedules that agree as multisets produce bit-identical totals.
Metrics evaluate(const Instance& inst, const Schedule& sched);

}  // namespace edgesched
