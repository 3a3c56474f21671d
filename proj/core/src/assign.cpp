#include "mcs/assign.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mcs {

MilpModel linearize(const Instance& inst) {
  MilpModel m;
  m.num_items = inst.num_items;
  m.num_tasks = inst.num_tasks();

  m.x_var_of.assign(inst.users.size(),
                    std::vector<int>(static_cast<std::size_t>(inst.num_items),
                                     -1));
  for (int i = 0; i < inst.num_users(); ++i) {
    for (int k : inst.users[static_cast<std::size_t>(i)].capability) {
      m.x_var_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          static_cast<int>(m.x_pairs.size());
      m.x_pairs.emplace_back(i, k);
    }
  }
  m.y_offset = static_cast<int>(m.x_pairs.size());
  m.z_offset = m.y_offset + inst.num_items;
  m.num_vars = m.z_offset + m.num_tasks;

  m.objective.assign(static_cast<std::size_t>(m.num_vars), 0.0);
  for (std::size_t p = 0; p < m.x_pairs.size(); ++p) {
    auto [i, k] = m.x_pairs[p];
    m.objective[p] =
        -inst.users[static_cast<std::size_t>(i)].cost_of(k);
  }
  for (int j = 0; j < m.num_tasks; ++j) {
    m.objective[static_cast<std::size_t>(m.z_var(j))] =
        inst.tasks[static_cast<std::size_t>(j)].valuation;
  }

  for (int i = 0; i < inst.num_users(); ++i) {
    const User& u = inst.users[static_cast<std::size_t>(i)];
    LpRow row;
    for (std::size_t t = 0; t < u.capability.size(); ++t) {
      row.terms.emplace_back(m.x_var(i, u.capability[t]), u.costs[t]);
    }
    row.rhs = u.budget;
    m.rows.push_back(std::move(row));
    m.row_kinds.push_back(MilpModel::RowKind::kBudget);
  }

  std::vector<std::vector<int>> sensers = item_sensers(inst);
  for (int k = 0; k < inst.num_items; ++k) {
    // x_{i,k} <= y_k for every able user, and y_k <= sum of x_{.,k}
    // (an empty sum pins y_k at zero).
    for (int i : sensers[static_cast<std::size_t>(k)]) {
      m.rows.push_back(LpRow{{{m.x_var(i, k), 1.0}, {m.y_var(k), -1.0}}, 0.0});
      m.row_kinds.push_back(MilpModel::RowKind::kItemLower);
    }
    LpRow cover;
    cover.terms.emplace_back(m.y_var(k), 1.0);
    for (int i : sensers[static_cast<std::size_t>(k)]) {
      cover.terms.emplace_back(m.x_var(i, k), -1.0);
    }
    cover.rhs = 0.0;
    m.rows.push_back(std::move(cover));
    m.row_kinds.push_back(MilpModel::RowKind::kItemUpper);
  }

  for (int j = 0; j < m.num_tasks; ++j) {
    for (int k : inst.tasks[static_cast<std::size_t>(j)].requirement) {
      m.rows.push_back(LpRow{{{m.z_var(j), 1.0}, {m.y_var(k), -1.0}}, 0.0});
      m.row_kinds.push_back(MilpModel::RowKind::kTaskCover);
    }
  }
  return m;
}

std::string MilpModel::debug_dump() const {
  auto var_name = [this](int v) {
    std::ostringstream os;
    if (v < y_offset) {
      os << "x[" << x_pairs[static_cast<std::size_t>(v)].first << ","
         << x_pairs[static_cast<std::size_t>(v)].second << "]";
    } else if (v < z_offset) {
      os << "y[" << (v - y_offset) << "]";
    } else {
      os << "z[" << (v - z_offset) << "]";
    }
    return os.str();
  };
  std::ostringstream os;
  os << "maximize";
  for (int v = 0; v < num_vars; ++v) {
    double c = objective[static_cast<std::size_t>(v)];
    if (c != 0.0) os << " " << (c > 0 ? "+" : "") << c << "*" << var_name(v);
  }
  os << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [v, c] : rows[r].terms) {
      os << " " << (c > 0 ? "+" : "") << c << "*" << var_name(v);
    }
    os << " <= " << rows[r].rhs << "\n";
  }
  return os.str();
}

LpSolution solve_lp(const MilpModel& model,
                    const std::vector<VarFixing>& fixings) {
  LpProblem lp;
  lp.num_vars = model.num_vars;
  lp.objective = model.objective;
  lp.lower.assign(static_cast<std::size_t>(model.num_vars), 0.0);
  lp.upper.assign(static_cast<std::size_t>(model.num_vars), 1.0);
  lp.rows = model.rows;
  for (const VarFixing& f : fixings) {
    if (f.var < 0 || f.var >= model.num_vars || (f.value != 0 && f.value != 1)) {
      throw ValidationError("invalid variable fixing");
    }
    lp.lower[static_cast<std::size_t>(f.var)] = f.value;
    lp.upper[static_cast<std::size_t>(f.var)] = f.value;
  }
  return solve_simplex(lp);
}

namespace {

// Branch-and-bound over the scheduling variables. Fixing a pair to 1 forces
// its item indicator to 1; fixing the last able pair of an item to 0 forces
// the item indicator (and the completion of every task requiring the item)
// to 0. Propagation keeps node relaxations small and detects budget
// infeasibility without an LP call.
struct BranchAndBound {
  const Instance& inst;
  MilpModel model;
  std::vector<std::vector<int>> sensers;
  std::vector<std::vector<int>> tasks_of_item;

  std::vector<int> fix;           // per variable: -1 free, else 0/1
  std::vector<double> spent;      // committed cost per user
  std::vector<int> free_sensers;  // per item: able pairs not fixed to 0

  double best_welfare = 0.0;
  std::vector<std::vector<std::uint8_t>> best_x;

  explicit BranchAndBound(const Instance& instance)
      : inst(instance), model(linearize(instance)) {
    sensers = item_sensers(inst);
    tasks_of_item.resize(static_cast<std::size_t>(inst.num_items));
    for (int j = 0; j < inst.num_tasks(); ++j) {
      for (int k : inst.tasks[static_cast<std::size_t>(j)].requirement) {
        tasks_of_item[static_cast<std::size_t>(k)].push_back(j);
      }
    }
    fix.assign(static_cast<std::size_t>(model.num_vars), -1);
    spent.assign(inst.users.size(), 0.0);
    free_sensers.resize(static_cast<std::size_t>(inst.num_items));
    for (int k = 0; k < inst.num_items; ++k) {
      free_sensers[static_cast<std::size_t>(k)] =
          static_cast<int>(sensers[static_cast<std::size_t>(k)].size());
    }
    best_x.assign(inst.users.size(),
                  std::vector<std::uint8_t>(
                      static_cast<std::size_t>(inst.num_items), 0));
  }

  std::vector<VarFixing> collect_fixings() const {
    std::vector<VarFixing> out;
    for (int v = 0; v < model.num_vars; ++v) {
      if (fix[static_cast<std::size_t>(v)] >= 0) {
        out.push_back({v, fix[static_cast<std::size_t>(v)]});
      }
    }
    return out;
  }

  void accept_candidate(const LpSolution& sol) {
    std::vector<std::vector<std::uint8_t>> x(
        inst.users.size(),
        std::vector<std::uint8_t>(static_cast<std::size_t>(inst.num_items),
                                  0));
    for (std::size_t p = 0; p < model.x_pairs.size(); ++p) {
      auto [i, k] = model.x_pairs[p];
      double v = fix[p] >= 0 ? fix[p] : sol.values[p];
      if (v > 0.5) {
        x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 1;
      }
    }
    Assignment a = derive_yz(inst, x);
    double welfare = social_welfare(inst, a);
    if (welfare > best_welfare + kEps) {
      best_welfare = welfare;
      best_x = std::move(x);
    }
  }

  // Most fractional scheduling variable of the node solution, -1 when the
  // scheduling part is integral.
  int pick_branch_var(const LpSolution& sol) const {
    int best = -1;
    double best_gap = 1.0;
    for (std::size_t p = 0; p < model.x_pairs.size(); ++p) {
      if (fix[p] >= 0) continue;
      double v = sol.values[p];
      if (v <= kEps || v >= 1.0 - kEps) continue;
      double gap = std::abs(v - 0.5);
      if (gap < best_gap - 1e-12) {
        best_gap = gap;
        best = static_cast<int>(p);
      }
    }
    return best;
  }

  void explore() {
    LpSolution sol = solve_lp(model, collect_fixings());
    if (sol.status != LpStatus::kOptimal) return;
    if (sol.objective <= best_welfare + kEps) return;
    int branch = pick_branch_var(sol);
    if (branch < 0) {
      accept_candidate(sol);
      return;
    }
    auto [i, k] = model.x_pairs[static_cast<std::size_t>(branch)];
    const User& u = inst.users[static_cast<std::size_t>(i)];

    // 1-branch first.
    double cost = u.cost_of(k);
    if (spent[static_cast<std::size_t>(i)] + cost <= u.budget + kEps) {
      fix[static_cast<std::size_t>(branch)] = 1;
      spent[static_cast<std::size_t>(i)] += cost;
      int yv = model.y_var(k);
      int old_y = fix[static_cast<std::size_t>(yv)];
      fix[static_cast<std::size_t>(yv)] = 1;
      explore();
      fix[static_cast<std::size_t>(yv)] = old_y;
      spent[static_cast<std::size_t>(i)] -= cost;
      fix[static_cast<std::size_t>(branch)] = -1;
    }

    // 0-branch; when the item loses its last able pair, the item indicator
    // and every dependent task completion collapse to 0.
    fix[static_cast<std::size_t>(branch)] = 0;
    std::vector<int> undo_vars;
    if (--free_sensers[static_cast<std::size_t>(k)] == 0) {
      fix[static_cast<std::size_t>(model.y_var(k))] = 0;
      undo_vars.push_back(model.y_var(k));
      for (int j : tasks_of_item[static_cast<std::size_t>(k)]) {
        int zv = model.z_var(j);
        if (fix[static_cast<std::size_t>(zv)] < 0) {
          fix[static_cast<std::size_t>(zv)] = 0;
          undo_vars.push_back(zv);
        }
      }
    }
    explore();
    for (int v : undo_vars) fix[static_cast<std::size_t>(v)] = -1;
    ++free_sensers[static_cast<std::size_t>(k)];
    fix[static_cast<std::size_t>(branch)] = -1;
  }

  Assignment run() {
    explore();
    return derive_yz(inst, best_x);
  }
};

}  // namespace

Assignment solve_exact(const Instance& inst) {
  BranchAndBound bb(inst);
  return bb.run();
}

RelaxationResult solve_relaxation(const Instance& inst) {
  MilpModel model = linearize(inst);
  LpSolution sol = solve_lp(model);
  RelaxationResult out;
  out.objective = sol.objective;
  out.assignment.x.assign(
      inst.users.size(),
      std::vector<double>(static_cast<std::size_t>(inst.num_items), 0.0));
  for (std::size_t p = 0; p < model.x_pairs.size(); ++p) {
    auto [i, k] = model.x_pairs[p];
    out.assignment.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
        sol.values[p];
  }
  out.assignment.y.assign(static_cast<std::size_t>(inst.num_items), 0.0);
  for (int k = 0; k < inst.num_items; ++k) {
    out.assignment.y[static_cast<std::size_t>(k)] =
        sol.values[static_cast<std::size_t>(model.y_var(k))];
  }
  out.assignment.z.assign(inst.tasks.size(), 0.0);
  for (int j = 0; j < inst.num_tasks(); ++j) {
    out.assignment.z[static_cast<std::size_t>(j)] =
        sol.values[static_cast<std::size_t>(model.z_var(j))];
  }
  return out;
}

}  // namespace mcs
