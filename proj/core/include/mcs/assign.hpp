#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcs/lp.hpp"
#include "mcs/model.hpp"

namespace mcs {

/// Linear model of the assignment problem. One binary variable per
/// schedulable (user, item) pair, per item, and per task; the objective
/// carries task valuations on the completion variables and negated sensing
/// costs on the scheduling variables. Rows are the user budget constraints,
/// the item-coverage linearization (an item indicator is at least each of
/// its scheduling variables and at most their sum), and the per-required-item
/// task-cover constraints.
struct MilpModel {
  enum class RowKind { kBudget, kItemLower, kItemUpper, kTaskCover };

  // Variable layout: scheduling variables first (ascending (user, item)),
  // then one variable per item, then one per task.
  std::vector<std::pair<int, int>> x_pairs;
  std::vector<std::vector<int>> x_var_of;  // [user][item] -> var index or -1
  int num_items = 0;
  int num_tasks = 0;
  int y_offset = 0;
  int z_offset = 0;
  int num_vars = 0;

  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<RowKind> row_kinds;

  int x_var(int user, int item) const {
    return x_var_of[static_cast<std::size_t>(user)]
                   [static_cast<std::size_t>(item)];
  }
  int y_var(int item) const { return y_offset + item; }
  int z_var(int task) const { return z_offset + task; }

  /// Plain-text listing of variables and rows, for inspection.
  std::string debug_dump() const;
};

MilpModel linearize(const Instance& inst);

/// Partial integer fixing of model variables, value in {0, 1}.
struct VarFixing {
  int var;
  int value;
};

/// Optimum of the model's linear relaxation with the given variables fixed.
/// Deterministic for a given model and fixing set.
LpSolution solve_lp(const MilpModel& model,
                    const std::vector<VarFixing>& fixings = {});

/// Depth-first branch-and-bound over the scheduling variables of the
/// linearized model. Returns a welfare-optimal integral assignment with the
/// item and task indicators re-derived from the scheduling matrix; ties go
/// to the first incumbent found under the deterministic branching order
/// (most fractional variable, lowest index on ties, 1-branch first).
Assignment solve_exact(const Instance& inst);

struct RelaxationResult {
  FractionalAssignment assignment;
  double objective = 0.0;
};

/// Optimum of the linear relaxation (no integrality); its objective is an
/// upper bound on the exact welfare.
RelaxationResult solve_relaxation(const Instance& inst);

}  // namespace mcs
