#pragma once

#include "edgesched/instance.hpp"

namespace edgesched {

// Round-robin accept baseline, O(n), never fails:
//   1. send the leading jobs to the server while they fit T, stopping at the
//      first job that does not;
//   2. hand the following jobs to device models 0,1,...,m-1,0,... while each
//      fits the shared device budget, stopping at the first misfit;
//   3. dump every remaining job on model 0 regardless of the budget.
// Phase 3 may blow the deadline; the report says so via the metrics.
SolveReport greedy_rra(const Instance& inst);

}  // namespace edgesched
