#pragma once

#include <cstdint>

#include "mcs/model.hpp"

namespace mcs {

/// Parameters of the seeded market generator. Items and users are placed
/// uniformly at random in an area_km x area_km square; a user can sense
/// every item within sense_radius_km of its position. Each task requires
/// items_per_task distinct items drawn uniformly; costs, budgets, and
/// per-item valuations are uniform in their ranges, and a task's valuation
/// is the sum of its per-item valuations.
struct GenParams {
  int num_users = 8;
  int num_tasks = 8;
  int num_items = 5;
  double area_km = 10.0;
  double sense_radius_km = 5.0;
  int items_per_task = 5;
  double cost_min = 0.0, cost_max = 1.0;
  double budget_min = 0.0, budget_max = 5.0;
  double item_value_min = 0.0, item_value_max = 1.5;
  std::uint64_t seed = 0;
};

/// Generates one market fully determined by the seed. Draw order: item
/// positions, user positions, task requirements, costs, budgets, item
/// values; each block index-ascending. Positions draw x then y; each task
/// requirement is a partial Fisher-Yates selection of items_per_task
/// indices, stored sorted. Throws ValidationError on bad parameters.
Instance generate(const GenParams& params);

/// Rewrites the market so no item is shared between tasks: an item required
/// by m >= 2 tasks becomes m single-task copies (ordered by requiring task),
/// each sensable by the same users at the same cost. Budgets are unchanged.
/// Idempotent, and the optimal welfare never increases.
Instance no_reuse_transform(const Instance& inst);

}  // namespace mcs
