#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgesched/instance.hpp"

namespace edgesched {

// Seeded probe instances for the self-check suites. Deterministic in k.
// The monotone probe draws n in [2,30], m in [1,5] and a budget around the
// balanced device/server split, so most (not all) probes have a feasible
// relaxation; callers treat infeasible draws as vacuous passes or skip them.
Instance monotone_probe_instance(std::uint64_t k);

// Identical-jobs probe on the millisecond grid: n in [2,8], m in [1,3],
// budget snapped to the grid. Small enough for the exhaustive oracle.
Instance identical_probe_instance(std::uint64_t k);

struct VerifySuiteResult {
  std::string name;
  std::string description;
  int passes = 0;
  int runs = 0;
};

// The four invariant suites behind `verify`: at most two fractional jobs per
// basic optimum, rounded makespan within 2T, accuracy within 2(a_max-a_min)
// of the relaxation, and DP-vs-exhaustive equality on identical jobs.
// Output is a pure function of `seeds`; no timing, no environment.
std::vector<VerifySuiteResult> run_verify(int seeds);

}  // namespace edgesched
