#include "edgesched/baseline.hpp"

#include <chrono>

namespace edgesched {

SolveReport greedy_rra(const Instance& inst) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.algorithm = "greedy";
  rep.schedule.assignment.assign(static_cast<size_t>(inst.n), 0);

  int j = 0;
  double es_load = 0.0;
  for (; j < inst.n; ++j) {
    const double p = inst.es_time(j);
    if (es_load + p > inst.deadline + kFeasEps) break;
    es_load += p;
    rep.schedule.assignment[static_cast<size_t>(j)] = inst.m;
  }
  double ed_load = 0.0;
  int slot = 0;
  for (; j < inst.n; ++j, ++slot) {
    const int i = slot % inst.m;
    const double p = inst.times[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (ed_load + p > inst.deadline + kFeasEps) break;
    ed_load += p;
    rep.schedule.assignment[static_cast<size_t>(j)] = i;
  }
  // whatever is left lands on model 0, deadline or not

  rep.metrics = evaluate(inst, rep.schedule);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace edgesched
