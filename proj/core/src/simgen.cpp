#include "mcs/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mcs/rng.hpp"

namespace mcs {

Instance generate(const GenParams& params) {
  if (params.num_users < 0 || params.num_tasks < 0 || params.num_items < 0) {
    throw ValidationError("counts must be nonnegative");
  }
  if (params.items_per_task > params.num_items) {
    throw ValidationError("items_per_task (" +
                          std::to_string(params.items_per_task) +
                          ") exceeds the number of items (" +
                          std::to_string(params.num_items) + ")");
  }
  if (params.items_per_task <= 0) {
    throw ValidationError("items_per_task must be positive");
  }
  if (params.cost_min < 0 || params.cost_max < params.cost_min ||
      params.budget_min < 0 || params.budget_max < params.budget_min ||
      params.item_value_min < 0 ||
      params.item_value_max < params.item_value_min) {
    throw ValidationError("ranges must be nonnegative and ordered");
  }

  SplitMix64 rng(params.seed);

  struct Point {
    double x, y;
  };
  std::vector<Point> item_pos(static_cast<std::size_t>(params.num_items));
  for (auto& p : item_pos) {
    p.x = rng.uniform(0.0, params.area_km);
    p.y = rng.uniform(0.0, params.area_km);
  }
  std::vector<Point> user_pos(static_cast<std::size_t>(params.num_users));
  for (auto& p : user_pos) {
    p.x = rng.uniform(0.0, params.area_km);
    p.y = rng.uniform(0.0, params.area_km);
  }

  Instance inst;
  inst.num_items = params.num_items;
  inst.users.resize(static_cast<std::size_t>(params.num_users));
  inst.tasks.resize(static_cast<std::size_t>(params.num_tasks));

  double radius2 = params.sense_radius_km * params.sense_radius_km;
  for (int i = 0; i < params.num_users; ++i) {
    User& u = inst.users[static_cast<std::size_t>(i)];
    for (int k = 0; k < params.num_items; ++k) {
      double dx = user_pos[static_cast<std::size_t>(i)].x -
                  item_pos[static_cast<std::size_t>(k)].x;
      double dy = user_pos[static_cast<std::size_t>(i)].y -
                  item_pos[static_cast<std::size_t>(k)].y;
      if (dx * dx + dy * dy <= radius2) u.capability.push_back(k);
    }
  }

  // Partial Fisher-Yates per task: swap a uniform tail pick into each of the
  // first items_per_task slots, then sort the selection.
  std::vector<int> deck(static_cast<std::size_t>(params.num_items));
  for (int j = 0; j < params.num_tasks; ++j) {
    std::iota(deck.begin(), deck.end(), 0);
    for (int t = 0; t < params.items_per_task; ++t) {
      int r = t + rng.below(params.num_items - t);
      std::swap(deck[static_cast<std::size_t>(t)],
                deck[static_cast<std::size_t>(r)]);
    }
    Task& task = inst.tasks[static_cast<std::size_t>(j)];
    task.requirement.assign(deck.begin(),
                            deck.begin() + params.items_per_task);
    std::sort(task.requirement.begin(), task.requirement.end());
  }

  for (User& u : inst.users) {
    u.costs.reserve(u.capability.size());
    for (std::size_t t = 0; t < u.capability.size(); ++t) {
      u.costs.push_back(rng.uniform(params.cost_min, params.cost_max));
    }
  }
  for (User& u : inst.users) {
    u.budget = rng.uniform(params.budget_min, params.budget_max);
  }
  for (Task& task : inst.tasks) {
    task.item_valuations.reserve(task.requirement.size());
    double sum = 0.0;
    for (std::size_t t = 0; t < task.requirement.size(); ++t) {
      double v = rng.uniform(params.item_value_min, params.item_value_max);
      task.item_valuations.push_back(v);
      sum += v;
    }
    task.valuation = sum;
  }
  return inst;
}

Instance no_reuse_transform(const Instance& inst) {
  std::vector<std::vector<int>> requiring_tasks(
      static_cast<std::size_t>(inst.num_items));
  for (int j = 0; j < inst.num_tasks(); ++j) {
    for (int k : inst.tasks[static_cast<std::size_t>(j)].requirement) {
      requiring_tasks[static_cast<std::size_t>(k)].push_back(j);
    }
  }

  // new_index_of[k]: first copy of original item k; shared items get one
  // copy per requiring task, ordered by task id.
  std::vector<int> new_index_of(static_cast<std::size_t>(inst.num_items));
  // copy_for_task[k][j] resolved through requiring_tasks order.
  int next = 0;
  for (int k = 0; k < inst.num_items; ++k) {
    new_index_of[static_cast<std::size_t>(k)] = next;
    std::size_t m = requiring_tasks[static_cast<std::size_t>(k)].size();
    next += m >= 2 ? static_cast<int>(m) : 1;
  }

  auto copy_index = [&](int item, int task) {
    const auto& reqs = requiring_tasks[static_cast<std::size_t>(item)];
    if (reqs.size() < 2) return new_index_of[static_cast<std::size_t>(item)];
    auto it = std::lower_bound(reqs.begin(), reqs.end(), task);
    return new_index_of[static_cast<std::size_t>(item)] +
           static_cast<int>(it - reqs.begin());
  };

  Instance out;
  out.num_items = next;

  out.users.reserve(inst.users.size());
  for (const User& u : inst.users) {
    User nu;
    nu.budget = u.budget;
    for (std::size_t t = 0; t < u.capability.size(); ++t) {
      int k = u.capability[t];
      std::size_t m = requiring_tasks[static_cast<std::size_t>(k)].size();
      int copies = m >= 2 ? static_cast<int>(m) : 1;
      int base = new_index_of[static_cast<std::size_t>(k)];
      for (int c = 0; c < copies; ++c) {
        nu.capability.push_back(base + c);
        nu.costs.push_back(u.costs[t]);
      }
    }
    out.users.push_back(std::move(nu));
  }

  out.tasks.reserve(inst.tasks.size());
  for (int j = 0; j < inst.num_tasks(); ++j) {
    const Task& t = inst.tasks[static_cast<std::size_t>(j)];
    Task nt;
    nt.valuation = t.valuation;
    for (std::size_t s = 0; s < t.requirement.size(); ++s) {
      nt.requirement.push_back(copy_index(t.requirement[s], j));
      if (!t.item_valuations.empty()) {
        nt.item_valuations.push_back(t.item_valuations[s]);
      }
    }
    // Copies are assigned in ascending original-item order, so the mapped
    // requirement stays sorted relative to distinct originals; sort anyway
    // to keep the canonical form.
    if (!nt.item_valuations.empty()) {
      std::vector<std::size_t> order(nt.requirement.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return nt.requirement[a] < nt.requirement[b];
      });
      Task sorted;
      sorted.valuation = nt.valuation;
      for (std::size_t idx : order) {
        sorted.requirement.push_back(nt.requirement[idx]);
        sorted.item_valuations.push_back(nt.item_valuations[idx]);
      }
      nt = std::move(sorted);
    } else {
      std::sort(nt.requirement.begin(), nt.requirement.end());
    }
    out.tasks.push_back(std::move(nt));
  }
  return out;
}

}  // namespace mcs
