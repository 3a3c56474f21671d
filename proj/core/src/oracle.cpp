#include "mcs/oracle.hpp"

#include <string>
#include <vector>

namespace mcs {

namespace {

struct Enumerator {
  const Instance& inst;
  std::vector<std::vector<int>> tasks_of_item;  // tasks requiring each item
  std::vector<int> pair_user;
  std::vector<int> pair_item;
  std::vector<double> pair_cost;

  // DFS state, updated incrementally as pairs are toggled.
  std::vector<std::uint8_t> chosen;
  std::vector<double> spent;          // per user
  std::vector<int> senser_count;      // per item
  std::vector<int> satisfied_items;   // per task
  double cost_sum = 0.0;
  double value_sum = 0.0;

  std::uint64_t explored = 0;
  double best_welfare = 0.0;
  bool have_best = false;
  std::vector<std::uint8_t> best_chosen;

  explicit Enumerator(const Instance& instance) : inst(instance) {
    tasks_of_item.resize(static_cast<std::size_t>(inst.num_items));
    for (int j = 0; j < inst.num_tasks(); ++j) {
      for (int k : inst.tasks[static_cast<std::size_t>(j)].requirement) {
        tasks_of_item[static_cast<std::size_t>(k)].push_back(j);
      }
    }
    for (int i = 0; i < inst.num_users(); ++i) {
      const User& u = inst.users[static_cast<std::size_t>(i)];
      for (std::size_t t = 0; t < u.capability.size(); ++t) {
        pair_user.push_back(i);
        pair_item.push_back(u.capability[t]);
        pair_cost.push_back(u.costs[t]);
      }
    }
    chosen.assign(pair_user.size(), 0);
    spent.assign(inst.users.size(), 0.0);
    senser_count.assign(static_cast<std::size_t>(inst.num_items), 0);
    satisfied_items.assign(inst.tasks.size(), 0);
  }

  void set_pair(std::size_t p) {
    chosen[p] = 1;
    cost_sum += pair_cost[p];
    spent[static_cast<std::size_t>(pair_user[p])] += pair_cost[p];
    int k = pair_item[p];
    if (senser_count[static_cast<std::size_t>(k)]++ == 0) {
      for (int j : tasks_of_item[static_cast<std::size_t>(k)]) {
        const Task& task = inst.tasks[static_cast<std::size_t>(j)];
        if (++satisfied_items[static_cast<std::size_t>(j)] ==
            static_cast<int>(task.requirement.size())) {
          value_sum += task.valuation;
        }
      }
    }
  }

  void unset_pair(std::size_t p) {
    chosen[p] = 0;
    cost_sum -= pair_cost[p];
    spent[static_cast<std::size_t>(pair_user[p])] -= pair_cost[p];
    int k = pair_item[p];
    if (--senser_count[static_cast<std::size_t>(k)] == 0) {
      for (int j : tasks_of_item[static_cast<std::size_t>(k)]) {
        const Task& task = inst.tasks[static_cast<std::size_t>(j)];
        if (satisfied_items[static_cast<std::size_t>(j)]-- ==
            static_cast<int>(task.requirement.size())) {
          value_sum -= task.valuation;
        }
      }
    }
  }

  // Visits scheduling vectors in lexicographic order (0-branch first), so
  // keeping the incumbent only on strict improvement yields the
  // lexicographically smallest maximizer.
  void dfs(std::size_t p) {
    if (p == pair_user.size()) {
      ++explored;
      double welfare = value_sum - cost_sum;
      if (!have_best || welfare > best_welfare) {
        have_best = true;
        best_welfare = welfare;
        best_chosen = chosen;
      }
      return;
    }
    dfs(p + 1);
    const User& u = inst.users[static_cast<std::size_t>(pair_user[p])];
    if (spent[static_cast<std::size_t>(pair_user[p])] + pair_cost[p] <=
        u.budget + kEps) {
      set_pair(p);
      dfs(p + 1);
      unset_pair(p);
    }
  }

  OracleResult run() {
    dfs(0);
    std::vector<std::vector<std::uint8_t>> x(
        inst.users.size(),
        std::vector<std::uint8_t>(static_cast<std::size_t>(inst.num_items),
                                  0));
    for (std::size_t p = 0; p < best_chosen.size(); ++p) {
      if (best_chosen[p]) {
        x[static_cast<std::size_t>(pair_user[p])]
         [static_cast<std::size_t>(pair_item[p])] = 1;
      }
    }
    OracleResult result;
    result.best = derive_yz(inst, x);
    result.welfare = best_welfare;
    result.explored = explored;
    return result;
  }
};

}  // namespace

OracleResult brute_force_optimal(const Instance& inst) {
  int pairs = inst.num_pairs();
  if (pairs > kOracleMaxPairs) {
    throw CapError("instance has " + std::to_string(pairs) +
                   " schedulable pairs, above the exhaustive-solver cap of " +
                   std::to_string(kOracleMaxPairs));
  }
  Enumerator e(inst);
  return e.run();
}

OracleResult brute_force_excluding_user(const Instance& inst, int user) {
  return brute_force_optimal(remove_user(inst, user));
}

OracleResult brute_force_excluding_task(const Instance& inst, int task) {
  return brute_force_optimal(remove_task(inst, task));
}

}  // namespace mcs
