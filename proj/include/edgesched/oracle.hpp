#pragma once

#include <optional>
#include <vector>

#include "edgesched/instance.hpp"

namespace edgesched {

struct ExactOptions {
  bool prune = true;
  // refuse instances whose full tree exceeds this many assignments
  double state_limit = 1e7;
};

// Exhaustive branch-and-bound over all (m+1)^n assignments. Branches jobs in
// index order and models in descending accuracy; the optimistic bound prunes
// only strictly worse subtrees, so among equal-value optima the
// lexicographically smallest assignment vector is returned. Throws
// InfeasibleError when no assignment fits both budgets, ValidationError
// (TooLarge) past the state limit.
SolveReport exact_ilp(const Instance& inst, const ExactOptions& opts = {});

// Exact-cardinality knapsack by exhaustive subset enumeration, for checking
// the DP. Guarded to at most 24 items. nullopt when no subset of the exact
// cardinality fits the capacity.
struct BruteCckpResult {
  std::vector<int> items;  // ascending indices
  double value = 0.0;
};
std::optional<BruteCckpResult> cckp_brute(const std::vector<double>& values,
                                          const std::vector<long long>& weights,
                                          long long capacity, int cardinality);

}  // namespace edgesched
