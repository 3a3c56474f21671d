#include "mcs/randomized.hpp"

#include <cmath>
#include <string>

#include "mcs/assign.hpp"
#include "mcs/rng.hpp"

namespace mcs {

namespace {

double fractional_cost(const Instance& inst, const FractionalAssignment& a,
                       int user) {
  const User& u = inst.users[static_cast<std::size_t>(user)];
  double cost = 0.0;
  for (std::size_t t = 0; t < u.capability.size(); ++t) {
    cost += u.costs[t] *
            a.x[static_cast<std::size_t>(user)]
               [static_cast<std::size_t>(u.capability[t])];
  }
  return cost;
}

double integral_cost(const Instance& inst, const Assignment& a, int user) {
  const User& u = inst.users[static_cast<std::size_t>(user)];
  double cost = 0.0;
  for (std::size_t t = 0; t < u.capability.size(); ++t) {
    if (a.x[static_cast<std::size_t>(user)]
           [static_cast<std::size_t>(u.capability[t])]) {
      cost += u.costs[t];
    }
  }
  return cost;
}

}  // namespace

FractionalVcgOutcome fractional_vcg(const BidProfile& bids) {
  FractionalVcgOutcome out;
  RelaxationResult rel = solve_relaxation(bids);
  out.assignment = std::move(rel.assignment);
  out.objective = rel.objective;

  for (int j = 0; j < bids.num_tasks(); ++j) {
    out.total_value += bids.tasks[static_cast<std::size_t>(j)].valuation *
                       out.assignment.z[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < bids.num_users(); ++i) {
    out.total_cost += fractional_cost(bids, out.assignment, i);
  }

  out.task_charges.assign(bids.tasks.size(), 0.0);
  for (int j = 0; j < bids.num_tasks(); ++j) {
    double welfare_without = solve_relaxation(remove_task(bids, j)).objective;
    double value_others =
        out.total_value - bids.tasks[static_cast<std::size_t>(j)].valuation *
                              out.assignment.z[static_cast<std::size_t>(j)];
    out.task_charges[static_cast<std::size_t>(j)] =
        welfare_without - value_others + out.total_cost;
  }

  out.user_payments.assign(bids.users.size(), 0.0);
  for (int i = 0; i < bids.num_users(); ++i) {
    double welfare_without = solve_relaxation(remove_user(bids, i)).objective;
    double cost_others =
        out.total_cost - fractional_cost(bids, out.assignment, i);
    out.user_payments[static_cast<std::size_t>(i)] =
        out.total_value - cost_others - welfare_without;
  }
  return out;
}

std::vector<Assignment> enumerate_allocations(const Instance& inst) {
  int pairs = inst.num_pairs();
  if (pairs > kEnumerationMaxPairs) {
    throw CapError(
        "instance has " + std::to_string(pairs) +
        " schedulable pairs, above the allocation-enumeration cap of " +
        std::to_string(kEnumerationMaxPairs) +
        "; use a smaller instance for the randomized baseline");
  }

  std::vector<int> pair_user, pair_item;
  std::vector<double> pair_cost;
  for (int i = 0; i < inst.num_users(); ++i) {
    const User& u = inst.users[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < u.capability.size(); ++t) {
      pair_user.push_back(i);
      pair_item.push_back(u.capability[t]);
      pair_cost.push_back(u.costs[t]);
    }
  }

  std::vector<Assignment> out;
  std::vector<std::vector<std::uint8_t>> x(
      inst.users.size(),
      std::vector<std::uint8_t>(static_cast<std::size_t>(inst.num_items), 0));
  std::vector<double> spent(inst.users.size(), 0.0);

  // Lexicographic DFS, 0-branch first; every leaf is budget-feasible.
  auto dfs = [&](auto&& self, std::size_t p) -> void {
    if (p == pair_user.size()) {
      out.push_back(derive_yz(inst, x));
      return;
    }
    self(self, p + 1);
    int i = pair_user[p];
    const User& u = inst.users[static_cast<std::size_t>(i)];
    if (spent[static_cast<std::size_t>(i)] + pair_cost[p] <=
        u.budget + kEps) {
      spent[static_cast<std::size_t>(i)] += pair_cost[p];
      x[static_cast<std::size_t>(i)][static_cast<std::size_t>(pair_item[p])] =
          1;
      self(self, p + 1);
      x[static_cast<std::size_t>(i)][static_cast<std::size_t>(pair_item[p])] =
          0;
      spent[static_cast<std::size_t>(i)] -= pair_cost[p];
    }
  };
  dfs(dfs, 0);
  return out;
}

Decomposition decompose(const FractionalVcgOutcome& frac,
                        const std::vector<Assignment>& allocations,
                        const Instance& inst) {
  const std::size_t count = allocations.size();
  LpProblem lp;
  for (std::size_t l = 0; l < count; ++l) lp.add_var(0.0, 1.0, 0.0);
  int alpha_var = lp.add_var(0.0, 1.0, -frac.total_cost);
  int beta_var = lp.add_var(0.0, 1.0, frac.total_value);

  for (int i = 0; i < inst.num_users(); ++i) {
    const User& u = inst.users[static_cast<std::size_t>(i)];
    for (int k : u.capability) {
      std::vector<std::pair<int, double>> terms;
      for (std::size_t l = 0; l < count; ++l) {
        if (allocations[l].x[static_cast<std::size_t>(i)]
                            [static_cast<std::size_t>(k)]) {
          terms.emplace_back(static_cast<int>(l), 1.0);
        }
      }
      terms.emplace_back(alpha_var,
                         -frac.assignment.x[static_cast<std::size_t>(i)]
                                           [static_cast<std::size_t>(k)]);
      lp.add_eq(std::move(terms), 0.0);
    }
  }
  for (int j = 0; j < inst.num_tasks(); ++j) {
    std::vector<std::pair<int, double>> terms;
    for (std::size_t l = 0; l < count; ++l) {
      if (allocations[l].z[static_cast<std::size_t>(j)]) {
        terms.emplace_back(static_cast<int>(l), 1.0);
      }
    }
    terms.emplace_back(beta_var,
                       -frac.assignment.z[static_cast<std::size_t>(j)]);
    lp.add_eq(std::move(terms), 0.0);
  }
  {
    std::vector<std::pair<int, double>> terms;
    for (std::size_t l = 0; l < count; ++l) {
      terms.emplace_back(static_cast<int>(l), 1.0);
    }
    lp.add_eq(std::move(terms), 1.0);
  }

  LpSolution sol = solve_simplex(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw DecompositionInfeasibleError(
        "no probability mixture of the enumerated allocations matches the "
        "scaled fractional optimum");
  }

  Decomposition dec;
  dec.alpha = sol.values[static_cast<std::size_t>(alpha_var)];
  dec.beta = sol.values[static_cast<std::size_t>(beta_var)];

  // A vanishing fractional schedule (or completion vector) leaves its scale
  // factor unconstrained; report 1.
  bool x_zero = true;
  for (const auto& row : frac.assignment.x) {
    for (double v : row) {
      if (v > kEps) x_zero = false;
    }
  }
  if (x_zero) dec.alpha = 1.0;
  bool z_zero = true;
  for (double v : frac.assignment.z) {
    if (v > kEps) z_zero = false;
  }
  if (z_zero) dec.beta = 1.0;

  for (std::size_t l = 0; l < count; ++l) {
    double lambda = sol.values[l];
    if (lambda > 1e-12) {
      dec.allocations.push_back(allocations[l]);
      dec.weights.push_back(lambda);
    }
  }
  return dec;
}

Realization realize(const Decomposition& dec, const FractionalVcgOutcome& frac,
                    const Instance& inst, std::uint64_t rng_seed) {
  SplitMix64 rng(rng_seed);
  double u = rng.uniform01();
  int chosen = static_cast<int>(dec.weights.size()) - 1;
  double cum = 0.0;
  for (std::size_t l = 0; l < dec.weights.size(); ++l) {
    cum += dec.weights[l];
    if (u < cum) {
      chosen = static_cast<int>(l);
      break;
    }
  }

  Realization r;
  r.allocation_index = chosen;
  const Assignment& picked = dec.allocations[static_cast<std::size_t>(chosen)];

  r.user_payments.assign(inst.users.size(), 0.0);
  for (int i = 0; i < inst.num_users(); ++i) {
    double expected_cost = 0.0;
    for (std::size_t l = 0; l < dec.allocations.size(); ++l) {
      expected_cost += dec.weights[l] * integral_cost(inst, dec.allocations[l], i);
    }
    if (expected_cost <= 0.0) continue;  // never scheduled: pays nothing
    double realized_cost = integral_cost(inst, picked, i);
    r.user_payments[static_cast<std::size_t>(i)] =
        dec.alpha * frac.user_payments[static_cast<std::size_t>(i)] *
        realized_cost / expected_cost;
  }

  r.task_charges.assign(inst.tasks.size(), 0.0);
  for (int j = 0; j < inst.num_tasks(); ++j) {
    double vj = inst.tasks[static_cast<std::size_t>(j)].valuation;
    double expected_value = 0.0;
    for (std::size_t l = 0; l < dec.allocations.size(); ++l) {
      if (dec.allocations[l].z[static_cast<std::size_t>(j)]) {
        expected_value += dec.weights[l] * vj;
      }
    }
    if (expected_value <= 0.0) continue;  // never completed: charged nothing
    double realized_value =
        picked.z[static_cast<std::size_t>(j)] ? vj : 0.0;
    r.task_charges[static_cast<std::size_t>(j)] =
        dec.beta * frac.task_charges[static_cast<std::size_t>(j)] *
        realized_value / expected_value;
  }
  return r;
}

}  // namespace mcs
