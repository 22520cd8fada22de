#include "edgesched/instance.hpp"

#include <algorithm>
#include <cmath>

namespace edgesched {

namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

Instance validate(Instance inst) {
  if (inst.m < 1) {
    throw ValidationError(ValidationIssue::DimensionMismatch,
                          "DimensionMismatch: need at least one device model (m >= 1)");
  }
  if (inst.n < 1) {
    throw ValidationError(ValidationIssue::DimensionMismatch,
                          "DimensionMismatch: need at least one job (n >= 1)");
  }
  const size_t models = static_cast<size_t>(inst.m) + 1;
  const size_t jobs = static_cast<size_t>(inst.n);
  if (inst.accuracies.size() != models) {
    throw ValidationError(ValidationIssue::DimensionMismatch,
                          "DimensionMismatch: accuracies must have m+1 entries");
  }
  if (inst.times.size() != models) {
    throw ValidationError(ValidationIssue::DimensionMismatch,
                          "DimensionMismatch: times must have m+1 rows");
  }
  for (const auto& row : inst.times) {
    if (row.size() != jobs) {
      throw ValidationError(ValidationIssue::DimensionMismatch,
                            "DimensionMismatch: each times row must have n entries");
    }
  }
  for (size_t i = 0; i < models; ++i) {
    const double a = inst.accuracies[i];
    if (!std::isfinite(a) || a < 0.0) {
      throw ValidationError(ValidationIssue::NonMonotoneAccuracy,
                            "NonMonotoneAccuracy: accuracies must be finite and nonnegative");
    }
    if (i > 0 && inst.accuracies[i - 1] > a) {
      throw ValidationError(ValidationIssue::NonMonotoneAccuracy,
                            "NonMonotoneAccuracy: accuracies must be nondecreasing by model index");
    }
  }
  for (size_t i = 0; i < models; ++i) {
    for (size_t j = 0; j < jobs; ++j) {
      if (!finite_positive(inst.times[i][j])) {
        throw ValidationError(ValidationIssue::NonPositiveTime,
                              "NonPositiveTime: every processing time must be > 0");
      }
    }
  }
  if (!finite_positive(inst.deadline)) {
    throw ValidationError(ValidationIssue::NonPositiveDeadline,
                          "NonPositiveDeadline: budget T must be > 0");
  }
  if (inst.comm_times) {
    if (inst.comm_times->size() != jobs) {
      throw ValidationError(ValidationIssue::DimensionMismatch,
                            "DimensionMismatch: comm_times must have n entries");
    }
    for (size_t j = 0; j < jobs; ++j) {
      const double c = (*inst.comm_times)[j];
      if (!finite_positive(c)) {
        throw ValidationError(ValidationIssue::NonPositiveTime,
                              "NonPositiveTime: comm times must be > 0");
      }
      // server row holds comm + compute, so comm alone must leave room
      if (c >= inst.times[models - 1][j]) {
        throw ValidationError(ValidationIssue::CommExceedsTotal,
                              "CommExceedsTotal: comm time must be below the server total");
      }
    }
  }
  return inst;
}

Metrics evaluate(const Instance& inst, const Schedule& sched) {
  const size_t jobs = static_cast<size_t>(inst.n);
  if (sched.assignment.size() != jobs) {
    throw ValidationError(ValidationIssue::DimensionMismatch,
                          "DimensionMismatch: schedule must assign every job");
  }
  std::vector<long long> counts(static_cast<size_t>(inst.m) + 1, 0);
  Metrics out;
  for (size_t j = 0; j < jobs; ++j) {
    const int i = sched.assignment[j];
    if (i < 0 || i > inst.m) {
      throw ValidationError(ValidationIssue::IndexOutOfRange,
                            "IndexOutOfRange: schedule entry outside [0, m]");
    }
    counts[static_cast<size_t>(i)] += 1;
    if (i == inst.m) {
      out.es_load += inst.times[static_cast<size_t>(i)][j];
    } else {
      out.ed_load += inst.times[static_cast<size_t>(i)][j];
    }
  }
  for (size_t i = 0; i < counts.size(); ++i) {
    out.total_accuracy += static_cast<double>(counts[i]) * inst.accuracies[i];
  }
  out.makespan = std::max(out.ed_load, out.es_load);
  out.violates_deadline = out.makespan > inst.deadline + kFeasEps;
  out.violation_pct = 100.0 * std::max(0.0, out.makespan - inst.deadline) / inst.deadline;
  return out;
}

}  // namespace edgesched
