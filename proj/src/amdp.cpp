#include "edgesched/amdp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace edgesched {

namespace {

constexpr double kGridSlack = 1e-9;  // relative, keeps decimal grids exact

void check_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: delta must be positive");
  }
}

// row spread allowed for "identical jobs": half a grid step
void check_identical_row(const std::vector<double>& row, double delta, const char* what) {
  const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
  if (*hi - *lo > delta / 2.0) {
    throw ValidationError(ValidationIssue::NotIdenticalJobs,
                          std::string("NotIdenticalJobs: ") + what + " varies by more than delta/2 across jobs");
  }
}

std::vector<int> counts_to_schedule(const std::vector<int>& device_jobs,
                                    const std::vector<int>& model_counts, std::vector<int> assignment) {
  size_t pos = 0;
  for (size_t i = 0; i < model_counts.size(); ++i) {
    for (int c = 0; c < model_counts[i]; ++c) {
      assignment[static_cast<size_t>(device_jobs[pos++])] = static_cast<int>(i);
    }
  }
  return assignment;
}

}  // namespace

long long to_units_up(double seconds, double delta) {
  const long long u = static_cast<long long>(std::ceil(seconds / delta - kGridSlack));
  return std::max<long long>(1, u);
}

long long to_units_down(double seconds, double delta) {
  return static_cast<long long>(std::floor(seconds / delta + kGridSlack));
}

long long es_count(double deadline, double es_time, double delta) {
  check_delta(delta);
  return to_units_down(deadline, delta) / to_units_up(es_time, delta);
}

CckpReduction build_cckp(const Instance& inst, double delta) {
  check_delta(delta);
  for (int i = 0; i <= inst.m; ++i) {
    check_identical_row(inst.times[static_cast<size_t>(i)], delta,
                        i == inst.m ? "server row" : "device row");
  }
  CckpReduction red;
  red.quantized.delta = delta;
  red.quantized.budget_units = to_units_down(inst.deadline, delta);
  red.quantized.ed_units.resize(static_cast<size_t>(inst.m));
  for (int i = 0; i < inst.m; ++i) {
    const auto& row = inst.times[static_cast<size_t>(i)];
    red.quantized.ed_units[static_cast<size_t>(i)] =
        to_units_up(*std::max_element(row.begin(), row.end()), delta);
  }
  const auto& es_row = inst.times[static_cast<size_t>(inst.m)];
  red.quantized.es_units = to_units_up(*std::max_element(es_row.begin(), es_row.end()), delta);

  const long long fit = red.quantized.budget_units / red.quantized.es_units;
  red.es_jobs = static_cast<int>(std::min<long long>(inst.n, fit));
  red.device_jobs = inst.n - red.es_jobs;
  if (red.device_jobs == 0) return red;

  auto& c = red.cckp;
  c.blocks = inst.m;
  c.copies = red.device_jobs;
  c.cardinality = red.device_jobs;
  c.capacity = red.quantized.budget_units;
  c.values.reserve(static_cast<size_t>(inst.m) * static_cast<size_t>(c.copies));
  c.weights.reserve(c.values.capacity());
  for (int i = 0; i < inst.m; ++i) {
    for (int r = 0; r < c.copies; ++r) {
      c.values.push_back(inst.accuracies[static_cast<size_t>(i)]);
      c.weights.push_back(red.quantized.ed_units[static_cast<size_t>(i)]);
    }
  }
  return red;
}

std::optional<CckpSelection> solve_cckp_dp(const CckpInstance& c) {
  const int blocks = c.blocks;
  const int copies = c.copies;
  const int total_items = blocks * copies;
  const int K = c.cardinality;
  if (K == 0) return CckpSelection{{}, std::vector<int>(static_cast<size_t>(blocks), 0), 0.0};
  if (K > total_items || c.capacity < 1) return std::nullopt;

  const long long cap = c.capacity;
  const size_t stride = static_cast<size_t>(K) + 1;
  const size_t table_size = static_cast<size_t>(cap + 1) * stride;
  const double ninf = -std::numeric_limits<double>::infinity();

  std::vector<double> table(table_size, ninf);
  for (long long tau = 0; tau <= cap; ++tau) table[static_cast<size_t>(tau) * stride] = 0.0;

  // snapshot before each block for the backward count recovery
  std::vector<std::vector<double>> snaps;
  snaps.reserve(static_cast<size_t>(blocks) + 1);

  // Skipping a cell is safe only when it provably cannot improve, so every
  // write stays bit-identical to the plain item-at-a-time recurrence (the
  // backward replay below depends on that). Two facts drive the pruning:
  // a cell first improved while absorbing copy number t of a block holds a
  // selection with exactly t copies of it (an unchanged source just repeats
  // a comparison that already lost), and such a selection weighs at least
  // t*w plus min_before per remaining item, where min_before is the lightest
  // weight among earlier blocks.
  long long min_before = std::numeric_limits<long long>::max();

  int done = 0;  // items processed so far
  for (int b = 0; b < blocks; ++b) {
    snaps.push_back(table);
    const double v = c.values[static_cast<size_t>(b) * static_cast<size_t>(copies)];
    const long long w = c.weights[static_cast<size_t>(b) * static_cast<size_t>(copies)];
    for (int copy = 1; copy <= copies; ++copy) {
      ++done;
      // states outside these k bounds either cannot exist yet or can no
      // longer grow into a full-cardinality selection
      const int k_hi_global = std::min(done, K);
      const int k_lo = std::max({1, K - (total_items - done), copy});
      const long long tau_lo = static_cast<long long>(copy) * w;
      if (k_lo > k_hi_global || tau_lo > cap) continue;
      for (long long tau = cap; tau >= tau_lo; --tau) {
        const size_t row = static_cast<size_t>(tau) * stride;
        const size_t prev = static_cast<size_t>(tau - w) * stride;
        int k_hi = k_hi_global;
        if (b == 0) {
          k_hi = copy;  // no earlier blocks: the selection is copies of this one
        } else {
          const long long lim = copy + (tau - tau_lo) / min_before;
          if (lim < static_cast<long long>(k_hi)) k_hi = static_cast<int>(lim);
        }
        for (int k = k_hi; k >= k_lo; --k) {
          const double cand = table[prev + static_cast<size_t>(k) - 1] + v;
          double& cur = table[row + static_cast<size_t>(k)];
          if (cand > cur) cur = cand;
        }
      }
    }
    min_before = std::min(min_before, w);
  }

  const double result = table[static_cast<size_t>(cap) * stride + static_cast<size_t>(K)];
  if (result == ninf) return std::nullopt;

  CckpSelection sel;
  sel.model_counts.assign(static_cast<size_t>(blocks), 0);
  long long tau = cap;
  int k = K;
  // walk blocks last to first; the smallest count whose replayed value
  // matches bit-exactly is the one the table actually recorded
  for (int b = blocks - 1; b >= 0; --b) {
    const double v = c.values[static_cast<size_t>(b) * static_cast<size_t>(copies)];
    const long long w = c.weights[static_cast<size_t>(b) * static_cast<size_t>(copies)];
    const std::vector<double>& before = snaps[static_cast<size_t>(b)];
    const std::vector<double>& after = b + 1 < blocks ? snaps[static_cast<size_t>(b) + 1] : table;
    const double target = after[static_cast<size_t>(tau) * stride + static_cast<size_t>(k)];
    int found = -1;
    const int t_max = static_cast<int>(std::min<long long>({static_cast<long long>(k),
                                                            static_cast<long long>(copies),
                                                            w > 0 ? tau / w : static_cast<long long>(k)}));
    for (int t = 0; t <= t_max; ++t) {
      double replay = before[static_cast<size_t>(tau - t * w) * stride + static_cast<size_t>(k - t)];
      for (int q = 0; q < t; ++q) replay += v;
      if (replay == target) {
        found = t;
        break;
      }
    }
    if (found < 0) throw std::logic_error("knapsack: backward walk lost the optimal path");
    sel.model_counts[static_cast<size_t>(b)] = found;
    tau -= static_cast<long long>(found) * w;
    k -= found;
  }
  if (k != 0) throw std::logic_error("knapsack: backward walk ended off cardinality");

  for (int b = 0; b < blocks; ++b) {
    for (int t = 0; t < sel.model_counts[static_cast<size_t>(b)]; ++t) {
      sel.items.push_back(b * copies + t);
    }
  }
  double value = 0.0;
  for (int item : sel.items) value += c.values[static_cast<size_t>(item)];
  sel.value = value;
  return sel;
}

SolveReport run_amdp(const Instance& inst, double delta) {
  const auto t0 = std::chrono::steady_clock::now();
  const CckpReduction red = build_cckp(inst, delta);

  SolveReport rep;
  rep.algorithm = "amdp";
  rep.schedule.assignment.assign(static_cast<size_t>(inst.n), inst.m);
  if (red.device_jobs > 0) {
    const auto sel = solve_cckp_dp(red.cckp);
    if (!sel) {
      throw InfeasibleError(InfeasibleKind::Cckp,
                            "Infeasible: the device budget cannot hold the leftover jobs");
    }
    // the last es_jobs jobs stay on the server; earlier jobs fill models in
    // ascending model order according to the selected per-model counts
    std::vector<int> device_jobs(static_cast<size_t>(red.device_jobs));
    std::iota(device_jobs.begin(), device_jobs.end(), 0);
    rep.schedule.assignment =
        counts_to_schedule(device_jobs, sel->model_counts, std::move(rep.schedule.assignment));
  }
  rep.metrics = evaluate(inst, rep.schedule);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SolveReport run_amdp_hetero(const Instance& inst, double delta) {
  const auto t0 = std::chrono::steady_clock::now();
  check_delta(delta);
  if (!inst.comm_times) {
    throw ValidationError(ValidationIssue::InvalidParams,
                          "InvalidParams: per-job upload times are required here");
  }
  for (int i = 0; i < inst.m; ++i) {
    check_identical_row(inst.times[static_cast<size_t>(i)], delta, "device row");
  }
  {
    // identical computation on the server once the upload part is removed
    std::vector<double> compute(static_cast<size_t>(inst.n));
    for (int j = 0; j < inst.n; ++j) {
      compute[static_cast<size_t>(j)] = inst.es_time(j) - (*inst.comm_times)[static_cast<size_t>(j)];
    }
    check_identical_row(compute, delta, "server compute");
  }

  const long long budget = to_units_down(inst.deadline, delta);
  std::vector<int> order(static_cast<size_t>(inst.n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return (*inst.comm_times)[static_cast<size_t>(a)] < (*inst.comm_times)[static_cast<size_t>(b)];
  });

  SolveReport rep;
  rep.algorithm = "amdp_hetero";
  rep.schedule.assignment.assign(static_cast<size_t>(inst.n), -1);
  long long used = 0;
  size_t taken = 0;
  for (; taken < order.size(); ++taken) {
    const long long u = to_units_up(inst.es_time(order[taken]), delta);
    if (used + u > budget) break;  // prefix only: stop at the first misfit
    used += u;
    rep.schedule.assignment[static_cast<size_t>(order[taken])] = inst.m;
  }

  std::vector<int> device_jobs;
  for (int j = 0; j < inst.n; ++j) {
    if (rep.schedule.assignment[static_cast<size_t>(j)] < 0) device_jobs.push_back(j);
  }
  if (!device_jobs.empty()) {
    CckpInstance c;
    c.blocks = inst.m;
    c.copies = static_cast<int>(device_jobs.size());
    c.cardinality = c.copies;
    c.capacity = budget;
    for (int i = 0; i < inst.m; ++i) {
      const auto& row = inst.times[static_cast<size_t>(i)];
      const long long w = to_units_up(*std::max_element(row.begin(), row.end()), delta);
      for (int r = 0; r < c.copies; ++r) {
        c.values.push_back(inst.accuracies[static_cast<size_t>(i)]);
        c.weights.push_back(w);
      }
    }
    const auto sel = solve_cckp_dp(c);
    if (!sel) {
      throw InfeasibleError(InfeasibleKind::Cckp,
                            "Infeasible: the device budget cannot hold the jobs left after offloading");
    }
    rep.schedule.assignment =
        counts_to_schedule(device_jobs, sel->model_counts, std::move(rep.schedule.assignment));
  }
  rep.metrics = evaluate(inst, rep.schedule);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace edgesched
