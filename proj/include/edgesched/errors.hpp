#pragma once

#include <stdexcept>
#include <string>

namespace edgesched {

// Rejected input: the instance or parameters are malformed, not merely hard.
enum class ValidationIssue {
  NonMonotoneAccuracy,
  NonPositiveTime,
  NonPositiveDeadline,
  DimensionMismatch,
  CommExceedsTotal,
  IndexOutOfRange,
  InvalidParams,
  NotIdenticalJobs,
  TooLarge,
};

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationIssue issue, const std::string& what)
      : std::invalid_argument(what), issue_(issue) {}
  ValidationIssue issue() const { return issue_; }

 private:
  ValidationIssue issue_;
};

// Well-formed instance, but no schedule satisfies the budget(s).
enum class InfeasibleKind {
  Instance,  // whole problem (LP infeasible or a job fits nowhere)
  SubIlp,    // two-job rounding subproblem
  Cckp,      // cardinality-constrained knapsack reduction
};

class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(InfeasibleKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  InfeasibleKind kind() const { return kind_; }

 private:
  InfeasibleKind kind_;
};

}  // namespace edgesched
