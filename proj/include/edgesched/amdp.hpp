#pragma once

#include <optional>
#include <vector>

#include "edgesched/instance.hpp"

namespace edgesched {

// Default quantization step for the DP, in seconds. The CLI lets
// EDGESCHED_DELTA or --delta override it.
inline constexpr double kDefaultDelta = 1e-3;

// Times on the integer grid: processing times round up, the budget rounds
// down, so any schedule feasible in units is feasible in seconds. A small
// relative slack keeps decimal inputs that sit exactly on the grid exact.
struct QuantizedTimes {
  double delta = kDefaultDelta;
  std::vector<long long> ed_units;  // one representative per device model
  long long es_units = 0;
  long long budget_units = 0;
};

long long to_units_up(double seconds, double delta);
long long to_units_down(double seconds, double delta);

// How many identical jobs the server fits within T, on the quantized grid.
long long es_count(double deadline, double es_time, double delta);

// Exact-cardinality knapsack over model copies: block i contributes `copies`
// items of value values[i*copies] and weight weights[i*copies].
struct CckpInstance {
  std::vector<double> values;
  std::vector<long long> weights;
  long long capacity = 0;
  int cardinality = 0;
  int blocks = 0;  // device model count
  int copies = 0;  // items per block = cardinality
};

struct CckpReduction {
  QuantizedTimes quantized;
  int es_jobs = 0;      // jobs peeled off to the server (n_c, capped at n)
  int device_jobs = 0;  // n_l; 0 means everything fits the server
  CckpInstance cckp;    // empty when device_jobs == 0
};

// Requires identical jobs: each model row may vary by at most delta/2.
// The representative per-model time is the row maximum.
CckpReduction build_cckp(const Instance& inst, double delta);

struct CckpSelection {
  std::vector<int> items;         // ascending; lowest-index copies per block
  std::vector<int> model_counts;  // size blocks
  double value = 0.0;
};

// 0/1 DP over the expanded items, item loop outermost, one in-place
// (capacity+1) x (cardinality+1) value table scanned tau- and k-descending.
// Reconstruction uses per-block table snapshots: walking blocks last to
// first, the smallest copy count that reproduces the stored value bit-exactly
// is taken (the replay repeats the DP's addition order, so the comparison is
// exact). nullopt when no exact-cardinality subset fits.
std::optional<CckpSelection> solve_cckp_dp(const CckpInstance& c);

// Identical-jobs solver: fill the server to its exact capacity (last n_c
// jobs), then place the rest by the knapsack DP. Always ends within T or
// throws InfeasibleError.
SolveReport run_amdp(const Instance& inst, double delta = kDefaultDelta);

// Identical computation, per-job upload times. Offloads the cheapest-upload
// prefix that fits the server budget, then runs the DP for the remainder.
// Requires comm_times.
SolveReport run_amdp_hetero(const Instance& inst, double delta = kDefaultDelta);

}  // namespace edgesched
