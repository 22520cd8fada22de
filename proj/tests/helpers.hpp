#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "edgesched/instance.hpp"
#include "edgesched/simplex.hpp"

namespace th {

inline edgesched::Instance make_instance(int m, int n, std::vector<double> acc,
                                         std::vector<std::vector<double>> times, double T,
                                         std::optional<std::vector<double>> comm = std::nullopt) {
  edgesched::Instance inst;
  inst.m = m;
  inst.n = n;
  inst.accuracies = std::move(acc);
  inst.times = std::move(times);
  inst.deadline = T;
  inst.comm_times = std::move(comm);
  return edgesched::validate(std::move(inst));
}

// square solve with partial pivoting; nullopt when singular
inline std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a,
                                                       std::vector<double> b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    }
    if (std::fabs(a[piv][col]) < 1e-11) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// independent LP reference: enumerate every basis (column subset of size
// `rows`), keep the feasible ones, maximize. Exponential, so tiny LPs only.
inline std::optional<double> enumerate_lp_objective(const edgesched::StandardLp& lp) {
  std::optional<double> best;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == lp.rows) {
      std::vector<std::vector<double>> bmat(static_cast<size_t>(lp.rows),
                                            std::vector<double>(static_cast<size_t>(lp.rows)));
      for (int r = 0; r < lp.rows; ++r) {
        for (int c = 0; c < lp.rows; ++c) {
          bmat[static_cast<size_t>(r)][static_cast<size_t>(c)] =
              lp.coeff[static_cast<size_t>(r)][static_cast<size_t>(pick[static_cast<size_t>(c)])];
        }
      }
      const auto xb = solve_square(bmat, lp.rhs);
      if (xb) {
        double obj = 0.0;
        bool ok = true;
        for (int c = 0; c < lp.rows; ++c) {
          const double v = (*xb)[static_cast<size_t>(c)];
          if (v < -1e-9) ok = false;
          obj += lp.objective[static_cast<size_t>(pick[static_cast<size_t>(c)])] * v;
        }
        if (ok && (!best || obj > *best)) best = obj;
      }
      return;
    }
    if (from == lp.cols) return;
    if (lp.cols - from < lp.rows - static_cast<int>(pick.size())) return;
    pick.push_back(from);
    rec(from + 1);
    pick.pop_back();
    rec(from + 1);
  };
  rec(0);
  return best;
}

struct BrutePair {
  int model_job1 = -1;
  int model_job2 = -1;
  double accuracy = 0.0;
};

// every (m+1)^2 placement of two jobs, fresh budget per machine
inline std::optional<BrutePair> brute_sub_ilp(const edgesched::Instance& inst, int j1, int j2) {
  std::optional<BrutePair> best;
  for (int i1 = 0; i1 <= inst.m; ++i1) {
    for (int i2 = 0; i2 <= inst.m; ++i2) {
      double ed = 0.0, es = 0.0;
      (i1 == inst.m ? es : ed) += inst.times[static_cast<size_t>(i1)][static_cast<size_t>(j1)];
      (i2 == inst.m ? es : ed) += inst.times[static_cast<size_t>(i2)][static_cast<size_t>(j2)];
      if (ed > inst.deadline + 1e-9 || es > inst.deadline + 1e-9) continue;
      const double acc =
          inst.accuracies[static_cast<size_t>(i1)] + inst.accuracies[static_cast<size_t>(i2)];
      if (!best || acc > best->accuracy + 1e-12) best = BrutePair{i1, i2, acc};
    }
  }
  return best;
}

// layered reference DP for the exact-cardinality knapsack (value only);
// optionally verifies that the table is nondecreasing in items and capacity
inline std::optional<double> cckp_layered(const std::vector<double>& values,
                                          const std::vector<long long>& weights, long long cap,
                                          int card, bool check_monotone = false) {
  const int s = static_cast<int>(values.size());
  const double ninf = -1e300;
  const size_t stride = static_cast<size_t>(card) + 1;
  std::vector<double> prev(static_cast<size_t>(cap + 1) * stride, ninf);
  for (long long t = 0; t <= cap; ++t) prev[static_cast<size_t>(t) * stride] = 0.0;
  for (int item = 0; item < s; ++item) {
    std::vector<double> cur = prev;
    const long long w = weights[static_cast<size_t>(item)];
    const double v = values[static_cast<size_t>(item)];
    for (long long t = w; t <= cap; ++t) {
      for (int k = 1; k <= card; ++k) {
        const double take = prev[static_cast<size_t>(t - w) * stride + static_cast<size_t>(k - 1)];
        if (take > ninf / 2) {
          double& slot = cur[static_cast<size_t>(t) * stride + static_cast<size_t>(k)];
          if (take + v > slot) slot = take + v;
        }
      }
    }
    if (check_monotone) {
      for (size_t idx = 0; idx < cur.size(); ++idx) {
        if (cur[idx] < prev[idx] - 1e-12) return std::nullopt;  // broke item monotonicity
      }
      for (long long t = 1; t <= cap; ++t) {
        for (int k = 0; k <= card; ++k) {
          const double lo = cur[static_cast<size_t>(t - 1) * stride + static_cast<size_t>(k)];
          const double hi = cur[static_cast<size_t>(t) * stride + static_cast<size_t>(k)];
          if (hi < lo - 1e-12) return std::nullopt;  // broke capacity monotonicity
        }
      }
    }
    prev = std::move(cur);
  }
  const double best = prev[static_cast<size_t>(cap) * stride + static_cast<size_t>(card)];
  if (best < ninf / 2) return std::nullopt;
  return best;
}

// two-pass enumeration: find the best value, then rescan in lexicographic
// order and return the first assignment within 1e-12 of it. Keeps the
// tie-break semantics testable without copying the solver's search order.
inline std::optional<std::pair<std::vector<int>, double>> brute_best_schedule(
    const edgesched::Instance& inst) {
  std::optional<double> best;
  {
    std::function<void(int, double, double, double)> rec = [&](int job, double acc, double ed,
                                                               double es) {
      if (ed > inst.deadline + 1e-9 || es > inst.deadline + 1e-9) return;
      if (job == inst.n) {
        if (!best || acc > *best) best = acc;
        return;
      }
      for (int i = 0; i <= inst.m; ++i) {
        const double p = inst.times[static_cast<size_t>(i)][static_cast<size_t>(job)];
        rec(job + 1, acc + inst.accuracies[static_cast<size_t>(i)], ed + (i == inst.m ? 0.0 : p),
            es + (i == inst.m ? p : 0.0));
      }
    };
    rec(0, 0.0, 0.0, 0.0);
  }
  if (!best) return std::nullopt;

  std::optional<std::pair<std::vector<int>, double>> found;
  std::vector<int> assign(static_cast<size_t>(inst.n), 0);
  std::function<void(int, double, double, double)> rec = [&](int job, double acc, double ed,
                                                             double es) {
    if (found) return;
    if (ed > inst.deadline + 1e-9 || es > inst.deadline + 1e-9) return;
    if (job == inst.n) {
      if (acc > *best - 1e-12) found = std::make_pair(assign, acc);
      return;
    }
    for (int i = 0; i <= inst.m; ++i) {
      assign[static_cast<size_t>(job)] = i;
      const double p = inst.times[static_cast<size_t>(i)][static_cast<size_t>(job)];
      rec(job + 1, acc + inst.accuracies[static_cast<size_t>(i)], ed + (i == inst.m ? 0.0 : p),
          es + (i == inst.m ? p : 0.0));
    }
  };
  rec(0, 0.0, 0.0, 0.0);
  return found;
}

// straight (m+1)^n enumeration, no pruning; nullopt when nothing fits
inline std::optional<double> brute_best_assignment(const edgesched::Instance& inst) {
  std::optional<double> best;
  std::vector<int> assign(static_cast<size_t>(inst.n), 0);
  std::function<void(int, double, double, double)> rec = [&](int job, double acc, double ed,
                                                             double es) {
    if (ed > inst.deadline + 1e-9 || es > inst.deadline + 1e-9) return;
    if (job == inst.n) {
      if (!best || acc > *best) best = acc;
      return;
    }
    for (int i = 0; i <= inst.m; ++i) {
      const double p = inst.times[static_cast<size_t>(i)][static_cast<size_t>(job)];
      rec(job + 1, acc + inst.accuracies[static_cast<size_t>(i)], ed + (i == inst.m ? 0.0 : p),
          es + (i == inst.m ? p : 0.0));
    }
  };
  rec(0, 0.0, 0.0, 0.0);
  return best;
}

}  // namespace th
