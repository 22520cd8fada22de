#pragma once

#include "edgesched/instance.hpp"
#include "edgesched/simplex.hpp"

namespace edgesched {

struct SubIlpAssignment {
  int model_job1 = -1;
  int model_job2 = -1;
  double accuracy = 0.0;
};

// Optimal placement of the two leftover jobs, each machine getting a fresh
// budget T (the integer part's load is deliberately ignored; that is what
// buys the 2T makespan bound). Cases, in order:
//   both server times fit together        -> both on the server
//   at least one server time fits alone   -> the job with the larger best
//     device accuracy stays on a device (ties keep job 1 there), the other
//     goes to the server; branches swap if the favored one would push a job
//     with server time > T onto the server
//   neither fits the server               -> best device pair, same device
//     allowed, lexicographically smallest (i', i'') on ties
// Throws InfeasibleError(SubIlp) when nothing fits.
SubIlpAssignment solve_sub_ilp(const Instance& inst, int job1, int job2);

// LP relaxation, then bounded rounding of the at-most-two fractional jobs.
// Output can overrun T but never 2T; the accuracy shortfall against the LP
// optimum is at most 2 * (a_max - a_min).
SolveReport run_amr2(const Instance& inst);

}  // namespace edgesched
