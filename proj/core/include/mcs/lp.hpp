#pragma once

#include <limits>
#include <utility>
#include <vector>

namespace mcs {

inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

/// One linear constraint: sum(coeff * var) <= rhs.
struct LpRow {
  std::vector<std::pair<int, double>> terms;
  double rhs = 0.0;
};

/// A bounded linear program: maximize objective . u subject to the rows and
/// lower <= u <= upper. Equality rows are expressed as a <=/>= pair by the
/// caller. Fixed variables are encoded as lower == upper.
struct LpProblem {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LpRow> rows;

  int add_var(double lb, double ub, double obj);
  void add_le(std::vector<std::pair<int, double>> terms, double rhs);
  void add_eq(std::vector<std::pair<int, double>> terms, double rhs);
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> values;
};

/// Dense two-phase primal simplex over bounded variables. Pivot selection is
/// Bland's rule (lowest eligible index for both the entering and the leaving
/// variable), which makes the solver cycle-free and deterministic for a given
/// problem. Never throws on solvable/unsolvable inputs: infeasibility and
/// unboundedness are reported through the status.
LpSolution solve_simplex(const LpProblem& lp);

}  // namespace mcs
