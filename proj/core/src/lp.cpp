#include "mcs/lp.hpp"

#include <cmath>
#include <cstdint>

#include "mcs/model.hpp"

namespace mcs {

namespace {

constexpr double kOptTol = 1e-9;    // reduced-cost threshold
constexpr double kFeasTol = 1e-9;   // bound-violation threshold
constexpr double kPivotTol = 1e-11; // smallest usable pivot element

struct Simplex {
  int n = 0;  // structural variables
  int m = 0;  // rows
  int art = 0;  // artificial variable index (= n + m)
  int cols = 0;  // n + m + 1

  std::vector<double> tab;   // m x cols, row-major
  std::vector<double> beta;  // basic values per row
  std::vector<double> cost;  // reduced-cost row for the current phase
  std::vector<int> basis;    // variable basic in each row
  std::vector<std::int8_t> is_basic;
  std::vector<std::int8_t> at_upper;  // nonbasic position flag
  std::vector<double> lb, ub;
  std::vector<double> obj;  // phase-2 objective over all columns

  double* row(int r) { return tab.data() + static_cast<std::size_t>(r) * cols; }

  double nonbasic_value(int j) const { return at_upper[j] ? ub[j] : lb[j]; }

  void eliminate(int r, int e) {
    double* pr = row(r);
    double inv = 1.0 / pr[e];
    for (int j = 0; j < cols; ++j) pr[j] *= inv;
    pr[e] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      double f = row(i)[e];
      if (std::abs(f) <= kPivotTol) {
        row(i)[e] = 0.0;
        continue;
      }
      double* pi = row(i);
      for (int j = 0; j < cols; ++j) pi[j] -= f * pr[j];
      pi[e] = 0.0;
    }
    double fc = cost[e];
    if (std::abs(fc) > 0.0) {
      for (int j = 0; j < cols; ++j) cost[j] -= fc * pr[j];
      cost[e] = 0.0;
    }
  }

  void build_cost_row(const std::vector<double>& c) {
    cost = c;
    for (int r = 0; r < m; ++r) {
      double cb = c[basis[r]];
      if (cb == 0.0) continue;
      const double* pr = row(r);
      for (int j = 0; j < cols; ++j) cost[j] -= cb * pr[j];
    }
    for (int r = 0; r < m; ++r) cost[basis[r]] = 0.0;
  }

  int pick_entering() const {
    for (int j = 0; j < cols; ++j) {
      if (is_basic[j]) continue;
      if (ub[j] - lb[j] <= kFeasTol) continue;  // fixed, never enters
      if (!at_upper[j] && cost[j] > kOptTol) return j;
      if (at_upper[j] && cost[j] < -kOptTol) return j;
    }
    return -1;
  }

  // Moves entering variable e off its bound; returns false when the problem
  // is unbounded in that direction. Ratio-test ties are broken toward the
  // smallest variable index (a bound flip counts as index e), completing
  // Bland's rule.
  bool step(int e) {
    constexpr double kRatioTie = 1e-10;
    double dir = at_upper[e] ? -1.0 : 1.0;
    int leave_row = -1;
    int leave_var = e;
    bool leave_at_upper = false;
    double t = ub[e] - lb[e];  // bound-to-bound flip distance

    for (int r = 0; r < m; ++r) {
      double a = dir * row(r)[e];
      if (std::abs(a) <= kPivotTol) continue;
      int b = basis[r];
      double cand;
      bool cand_upper;
      if (a > 0.0) {  // basic value decreases toward its lower bound
        cand = (beta[r] - lb[b]) / a;
        cand_upper = false;
      } else {  // basic value increases toward its upper bound
        if (ub[b] == kLpInfinity) continue;
        cand = (ub[b] - beta[r]) / (-a);
        cand_upper = true;
      }
      if (cand < 0.0) cand = 0.0;
      bool better = cand < t - kRatioTie;
      bool tie = !better && cand < t + kRatioTie && b < leave_var;
      if (better || tie) {
        if (cand < t) t = cand;
        leave_row = r;
        leave_var = b;
        leave_at_upper = cand_upper;
      }
    }

    if (t == kLpInfinity) return false;

    for (int r = 0; r < m; ++r) beta[r] -= dir * t * row(r)[e];

    if (leave_row < 0) {
      at_upper[e] = at_upper[e] ? 0 : 1;  // bound flip, basis unchanged
      return true;
    }

    double enter_value = nonbasic_value(e) + dir * t;
    int out = basis[leave_row];
    eliminate(leave_row, e);
    basis[leave_row] = e;
    is_basic[e] = 1;
    is_basic[out] = 0;
    at_upper[out] = leave_at_upper ? 1 : 0;
    beta[leave_row] = enter_value;
    return true;
  }

  // Returns kOptimal when no eligible entering variable remains.
  LpStatus iterate() {
    // Bland's rule cannot cycle; the cap only guards against numerical
    // stalling on corrupted data.
    const long limit = 2000L * (m + cols) + 10000L;
    for (long it = 0; it < limit; ++it) {
      int e = pick_entering();
      if (e < 0) return LpStatus::kOptimal;
      if (!step(e)) return LpStatus::kUnbounded;
    }
    throw Error("simplex iteration limit exceeded");
  }
};

}  // namespace

int LpProblem::add_var(double lb, double ub, double obj_coeff) {
  lower.push_back(lb);
  upper.push_back(ub);
  objective.push_back(obj_coeff);
  return num_vars++;
}

void LpProblem::add_le(std::vector<std::pair<int, double>> terms, double rhs) {
  rows.push_back(LpRow{std::move(terms), rhs});
}

void LpProblem::add_eq(std::vector<std::pair<int, double>> terms, double rhs) {
  LpRow ge;
  ge.rhs = -rhs;
  ge.terms.reserve(terms.size());
  for (const auto& [v, c] : terms) ge.terms.emplace_back(v, -c);
  rows.push_back(LpRow{std::move(terms), rhs});
  rows.push_back(std::move(ge));
}

LpSolution solve_simplex(const LpProblem& lp) {
  Simplex s;
  s.n = lp.num_vars;
  s.m = static_cast<int>(lp.rows.size());
  s.art = s.n + s.m;
  s.cols = s.n + s.m + 1;

  s.tab.assign(static_cast<std::size_t>(s.m) * s.cols, 0.0);
  s.lb.assign(static_cast<std::size_t>(s.cols), 0.0);
  s.ub.assign(static_cast<std::size_t>(s.cols), kLpInfinity);
  s.obj.assign(static_cast<std::size_t>(s.cols), 0.0);
  for (int j = 0; j < s.n; ++j) {
    s.lb[j] = lp.lower[static_cast<std::size_t>(j)];
    s.ub[j] = lp.upper[static_cast<std::size_t>(j)];
    s.obj[j] = lp.objective[static_cast<std::size_t>(j)];
  }
  s.ub[s.art] = 0.0;  // opened only if phase 1 is needed

  s.basis.resize(static_cast<std::size_t>(s.m));
  s.is_basic.assign(static_cast<std::size_t>(s.cols), 0);
  s.at_upper.assign(static_cast<std::size_t>(s.cols), 0);
  s.beta.assign(static_cast<std::size_t>(s.m), 0.0);

  for (int r = 0; r < s.m; ++r) {
    const LpRow& lr = lp.rows[static_cast<std::size_t>(r)];
    double* pr = s.row(r);
    for (const auto& [v, c] : lr.terms) pr[v] += c;
    pr[s.n + r] = 1.0;  // slack
    pr[s.art] = -1.0;
    s.basis[static_cast<std::size_t>(r)] = s.n + r;
    s.is_basic[static_cast<std::size_t>(s.n + r)] = 1;
    double shift = 0.0;
    for (const auto& [v, c] : lr.terms) shift += c * s.lb[v];
    s.beta[static_cast<std::size_t>(r)] = lr.rhs - shift;
  }

  // Phase 1: drive the single artificial variable (column -1 in every row)
  // to zero when the all-slack start is infeasible.
  int worst = -1;
  for (int r = 0; r < s.m; ++r) {
    if (s.beta[r] < -kFeasTol && (worst < 0 || s.beta[r] < s.beta[worst])) {
      worst = r;
    }
  }
  if (worst >= 0) {
    s.ub[s.art] = kLpInfinity;
    std::vector<double> phase1(static_cast<std::size_t>(s.cols), 0.0);
    phase1[s.art] = -1.0;

    double enter_value = -s.beta[worst];  // pivot element is -1
    int out = s.basis[worst];
    for (int r = 0; r < s.m; ++r) {
      if (r != worst) s.beta[r] += enter_value;  // column of -1 everywhere
    }
    s.cost.assign(static_cast<std::size_t>(s.cols), 0.0);
    s.eliminate(worst, s.art);
    s.basis[worst] = s.art;
    s.is_basic[s.art] = 1;
    s.is_basic[out] = 0;
    s.at_upper[out] = 0;
    s.beta[worst] = enter_value;

    s.build_cost_row(phase1);
    LpStatus st = s.iterate();
    (void)st;  // phase-1 objective is bounded by zero

    double art_value = 0.0;
    int art_row = -1;
    for (int r = 0; r < s.m; ++r) {
      if (s.basis[r] == s.art) {
        art_row = r;
        art_value = s.beta[r];
      }
    }
    if (!s.is_basic[s.art]) art_value = s.nonbasic_value(s.art);
    if (art_value > kFeasTol) {
      return LpSolution{LpStatus::kInfeasible, 0.0, {}};
    }
    if (art_row >= 0) {
      // Degenerate at zero: pivot the artificial out on any usable column.
      for (int j = 0; j < s.cols; ++j) {
        if (j == s.art || s.is_basic[j]) continue;
        if (std::abs(s.row(art_row)[j]) > 1e-7) {
          int old = s.basis[art_row];
          s.eliminate(art_row, j);
          s.basis[art_row] = j;
          s.is_basic[j] = 1;
          s.is_basic[old] = 0;
          s.beta[art_row] = s.nonbasic_value(j);
          break;
        }
      }
      // If no column qualifies the row is redundant; the artificial stays
      // basic at value zero and is frozen by its bounds below.
    }
    s.ub[s.art] = 0.0;
    s.at_upper[s.art] = 0;
  }

  s.build_cost_row(s.obj);
  LpStatus st = s.iterate();
  if (st == LpStatus::kUnbounded) {
    return LpSolution{LpStatus::kUnbounded, 0.0, {}};
  }

  LpSolution sol;
  sol.status = LpStatus::kOptimal;
  sol.values.assign(static_cast<std::size_t>(s.n), 0.0);
  for (int j = 0; j < s.n; ++j) {
    sol.values[static_cast<std::size_t>(j)] = s.nonbasic_value(j);
  }
  for (int r = 0; r < s.m; ++r) {
    if (s.basis[r] < s.n) {
      sol.values[static_cast<std::size_t>(s.basis[r])] = s.beta[r];
    }
  }
  for (int j = 0; j < s.n; ++j) {
    double& v = sol.values[static_cast<std::size_t>(j)];
    if (v < s.lb[j]) v = s.lb[j];
    if (v > s.ub[j]) v = s.ub[j];
  }
  double objective = 0.0;
  for (int j = 0; j < s.n; ++j) {
    objective += lp.objective[static_cast<std::size_t>(j)] *
                 sol.values[static_cast<std::size_t>(j)];
  }
  sol.objective = objective;
  return sol;
}

}  // namespace mcs
