#include "edgesched/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace edgesched {

StandardLp build_relaxation(const Instance& inst) {
  StandardLp lp;
  lp.n = inst.n;
  lp.m = inst.m;
  lp.rows = inst.n + 2;
  lp.cols = inst.n * (inst.m + 1) + 2;
  lp.objective.assign(static_cast<size_t>(lp.cols), 0.0);
  lp.coeff.assign(static_cast<size_t>(lp.rows), std::vector<double>(static_cast<size_t>(lp.cols), 0.0));
  lp.rhs.assign(static_cast<size_t>(lp.rows), 0.0);

  for (int i = 0; i <= inst.m; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      const size_t c = static_cast<size_t>(lp.col(i, j));
      lp.objective[c] = inst.accuracies[static_cast<size_t>(i)];
      const double p = inst.times[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i < inst.m) {
        lp.coeff[0][c] = p;  // all device models share one budget row
      } else {
        lp.coeff[1][c] = p;
      }
      lp.coeff[static_cast<size_t>(2 + j)][c] = 1.0;
    }
  }
  lp.coeff[0][static_cast<size_t>(lp.slack_ed())] = 1.0;
  lp.coeff[1][static_cast<size_t>(lp.slack_es())] = 1.0;
  lp.rhs[0] = inst.deadline;
  lp.rhs[1] = inst.deadline;
  for (int j = 0; j < inst.n; ++j) lp.rhs[static_cast<size_t>(2 + j)] = 1.0;
  return lp;
}

namespace {

// Full reduced tableau; `red` is the reduced-cost row for a maximization,
// so optimality is "no entry above kPivotEps".
struct Tableau {
  int rows = 0;
  int cols = 0;  // including artificials during phase one
  std::vector<std::vector<double>> t;
  std::vector<double> rhs;
  std::vector<double> red;
  std::vector<int> basis;
  std::vector<char> eligible;

  void pivot(int pr, int pc) {
    auto& prow = t[static_cast<size_t>(pr)];
    const double piv = prow[static_cast<size_t>(pc)];
    for (int c = 0; c < cols; ++c) prow[static_cast<size_t>(c)] /= piv;
    rhs[static_cast<size_t>(pr)] /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == pr) continue;
      auto& row = t[static_cast<size_t>(r)];
      const double f = row[static_cast<size_t>(pc)];
      if (f == 0.0) continue;
      for (int c = 0; c < cols; ++c) row[static_cast<size_t>(c)] -= f * prow[static_cast<size_t>(c)];
      row[static_cast<size_t>(pc)] = 0.0;
      rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(pr)];
    }
    const double g = red[static_cast<size_t>(pc)];
    if (g != 0.0) {
      for (int c = 0; c < cols; ++c) red[static_cast<size_t>(c)] -= g * prow[static_cast<size_t>(c)];
      red[static_cast<size_t>(pc)] = 0.0;
    }
    basis[static_cast<size_t>(pr)] = pc;
  }

  // Bland: enter at the lowest improving column, leave at the minimum ratio
  // breaking ties toward the lowest basic column index. Returns false at
  // optimality; throws if a column is improving but unblocked (unbounded).
  bool step() {
    int enter = -1;
    for (int c = 0; c < cols; ++c) {
      if (eligible[static_cast<size_t>(c)] && red[static_cast<size_t>(c)] > kPivotEps) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return false;
    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < rows; ++r) {
      const double a = t[static_cast<size_t>(r)][static_cast<size_t>(enter)];
      if (a <= kPivotEps) continue;
      const double ratio = rhs[static_cast<size_t>(r)] / a;
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<size_t>(r)] < basis[static_cast<size_t>(leave)])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("simplex: unbounded direction in a bounded program");
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

BasicSolution simplex_solve(const StandardLp& lp) {
  const int n = lp.n;
  const int art0 = lp.cols;  // artificials cover the n per-job rows
  Tableau tb;
  tb.rows = lp.rows;
  tb.cols = lp.cols + n;
  tb.t.assign(static_cast<size_t>(tb.rows), std::vector<double>(static_cast<size_t>(tb.cols), 0.0));
  tb.rhs = lp.rhs;
  tb.basis.assign(static_cast<size_t>(tb.rows), -1);
  tb.eligible.assign(static_cast<size_t>(tb.cols), 1);
  for (int r = 0; r < tb.rows; ++r) {
    for (int c = 0; c < lp.cols; ++c) {
      tb.t[static_cast<size_t>(r)][static_cast<size_t>(c)] = lp.coeff[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
  }
  // Budget rows start basic on their slacks; job rows need artificials.
  tb.basis[0] = lp.slack_ed();
  tb.basis[1] = lp.slack_es();
  for (int j = 0; j < n; ++j) {
    tb.t[static_cast<size_t>(2 + j)][static_cast<size_t>(art0 + j)] = 1.0;
    tb.basis[static_cast<size_t>(2 + j)] = art0 + j;
  }

  // Phase one: maximize -(sum of artificials). With the starting basis the
  // reduced cost of x_{ij} is +1 (each appears in exactly one job row).
  tb.red.assign(static_cast<size_t>(tb.cols), 0.0);
  for (int i = 0; i <= lp.m; ++i) {
    for (int j = 0; j < n; ++j) tb.red[static_cast<size_t>(lp.col(i, j))] = 1.0;
  }
  double phase1 = 0.0;
  for (int j = 0; j < n; ++j) phase1 -= lp.rhs[static_cast<size_t>(2 + j)];
  while (tb.step()) {
  }
  // Objective value = -(remaining infeasibility); recompute from the basis.
  phase1 = 0.0;
  for (int r = 0; r < tb.rows; ++r) {
    if (tb.basis[static_cast<size_t>(r)] >= art0) phase1 -= tb.rhs[static_cast<size_t>(r)];
  }
  BasicSolution out;
  if (phase1 < -kLpEps) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  // Zero-level artificials may linger in the basis; pivot them onto any real
  // column. The constraint matrix has full row rank, so a pivot always exists.
  for (int r = 0; r < tb.rows; ++r) {
    if (tb.basis[static_cast<size_t>(r)] < art0) continue;
    int c = 0;
    for (; c < lp.cols; ++c) {
      if (std::fabs(tb.t[static_cast<size_t>(r)][static_cast<size_t>(c)]) > kPivotEps) break;
    }
    if (c == lp.cols) throw std::logic_error("simplex: rank-deficient constraint matrix");
    tb.pivot(r, c);
  }
  for (int j = 0; j < n; ++j) tb.eligible[static_cast<size_t>(art0 + j)] = 0;

  // Phase two: real objective, artificials locked out.
  for (int c = 0; c < tb.cols; ++c) {
    tb.red[static_cast<size_t>(c)] = c < lp.cols ? lp.objective[static_cast<size_t>(c)] : 0.0;
  }
  for (int r = 0; r < tb.rows; ++r) {
    const int b = tb.basis[static_cast<size_t>(r)];
    const double cb = b < lp.cols ? lp.objective[static_cast<size_t>(b)] : 0.0;
    if (cb == 0.0) continue;
    for (int c = 0; c < tb.cols; ++c) {
      tb.red[static_cast<size_t>(c)] -= cb * tb.t[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
  }
  while (tb.step()) {
  }

  out.status = LpStatus::Optimal;
  out.x.assign(static_cast<size_t>(lp.cols), 0.0);
  out.basis.assign(static_cast<size_t>(tb.rows), -1);
  for (int r = 0; r < tb.rows; ++r) {
    const int b = tb.basis[static_cast<size_t>(r)];
    if (b >= art0) throw std::logic_error("simplex: artificial survived phase one");
    out.basis[static_cast<size_t>(r)] = b;
    out.x[static_cast<size_t>(b)] = tb.rhs[static_cast<size_t>(r)];
  }
  double obj = 0.0;
  for (int c = 0; c < lp.cols; ++c) obj += lp.objective[static_cast<size_t>(c)] * out.x[static_cast<size_t>(c)];
  out.objective = obj;
  return out;
}

std::vector<int> fractional_jobs(const StandardLp& lp, const BasicSolution& sol) {
  std::vector<int> frac;
  for (int j = 0; j < lp.n; ++j) {
    for (int i = 0; i <= lp.m; ++i) {
      const double v = sol.x[static_cast<size_t>(lp.col(i, j))];
      if (v > kLpEps && v < 1.0 - kLpEps) {
        frac.push_back(j);
        break;
      }
    }
  }
  return frac;
}

}  // namespace edgesched
