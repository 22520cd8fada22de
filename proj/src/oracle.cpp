#include "edgesched/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edgesched {

namespace {

constexpr double kTieEps = 1e-12;

struct Dfs {
  const Instance& inst;
  std::vector<int> model_order;  // descending accuracy, index breaks ties
  std::vector<int> current;
  std::vector<int> best;
  double best_value = -1.0;
  bool prune = true;
  double a_max = 0.0;

  explicit Dfs(const Instance& in) : inst(in) {
    model_order.resize(static_cast<size_t>(in.m) + 1);
    std::iota(model_order.begin(), model_order.end(), 0);
    std::stable_sort(model_order.begin(), model_order.end(), [&](int a, int b) {
      return in.accuracies[static_cast<size_t>(a)] > in.accuracies[static_cast<size_t>(b)];
    });
    current.assign(static_cast<size_t>(in.n), -1);
    a_max = in.accuracies[static_cast<size_t>(in.m)];
  }

  void walk(int job, double value, double ed, double es) {
    if (job == inst.n) {
      if (value > best_value + kTieEps ||
          (value > best_value - kTieEps && (best.empty() || current < best))) {
        best_value = std::max(best_value, value);
        best = current;
      }
      return;
    }
    if (prune && !best.empty()) {
      const double bound = value + static_cast<double>(inst.n - job) * a_max;
      if (bound < best_value - kTieEps) return;  // ties stay alive for the lex rule
    }
    for (int i : model_order) {
      const double p = inst.times[static_cast<size_t>(i)][static_cast<size_t>(job)];
      double ned = ed, nes = es;
      if (i == inst.m) {
        nes += p;
      } else {
        ned += p;
      }
      if (ned > inst.deadline + kFeasEps || nes > inst.deadline + kFeasEps) continue;
      current[static_cast<size_t>(job)] = i;
      walk(job + 1, value + inst.accuracies[static_cast<size_t>(i)], ned, nes);
    }
    current[static_cast<size_t>(job)] = -1;
  }
};

}  // namespace

SolveReport exact_ilp(const Instance& inst, const ExactOptions& opts) {
  const double tree = static_cast<double>(inst.n) * std::log(static_cast<double>(inst.m) + 1.0);
  if (tree > std::log(opts.state_limit)) {
    throw ValidationError(ValidationIssue::TooLarge,
                          "TooLarge: exhaustive search bound exceeded, (m+1)^n over the state limit");
  }
  const auto t0 = std::chrono::steady_clock::now();
  Dfs dfs(inst);
  dfs.prune = opts.prune;
  dfs.walk(0, 0.0, 0.0, 0.0);
  if (dfs.best.empty()) {
    throw InfeasibleError(InfeasibleKind::Instance,
                          "Infeasible: no complete assignment meets both budgets");
  }
  SolveReport rep;
  rep.algorithm = "exact";
  rep.schedule.assignment = dfs.best;
  rep.metrics = evaluate(inst, rep.schedule);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::optional<BruteCckpResult> cckp_brute(const std::vector<double>& values,
                                          const std::vector<long long>& weights,
                                          long long capacity, int cardinality) {
  const int s = static_cast<int>(values.size());
  if (weights.size() != values.size()) {
    throw ValidationError(ValidationIssue::DimensionMismatch,
                          "DimensionMismatch: values and weights must align");
  }
  if (s > 24) {
    throw ValidationError(ValidationIssue::TooLarge, "TooLarge: brute-force knapsack capped at 24 items");
  }
  if (cardinality < 0 || cardinality > s) return std::nullopt;

  std::optional<BruteCckpResult> best;
  std::vector<int> picked;
  picked.reserve(static_cast<size_t>(cardinality));
  // take/skip recursion, lowest indices first, strict improvement only:
  // the first optimum found is the lexicographically smallest item set
  auto rec = [&](auto&& self, int idx, int left, long long cap, double value) -> void {
    if (left == 0) {
      if (!best || value > best->value + kTieEps) {
        best = BruteCckpResult{picked, value};
      }
      return;
    }
    if (s - idx < left) return;
    if (weights[static_cast<size_t>(idx)] <= cap) {
      picked.push_back(idx);
      self(self, idx + 1, left - 1, cap - weights[static_cast<size_t>(idx)],
           value + values[static_cast<size_t>(idx)]);
      picked.pop_back();
    }
    self(self, idx + 1, left, cap, value);
  };
  rec(rec, 0, cardinality, capacity, 0.0);
  if (best) {
    // canonical value: per-item ascending fold, matching the DP's report
    double v = 0.0;
    for (int idx : best->items) v += values[static_cast<size_t>(idx)];
    best->value = v;
  }
  return best;
}

}  // namespace edgesched
