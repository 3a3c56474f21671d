#include "mcs/vcg.hpp"

#include <numeric>

#include "mcs/assign.hpp"

namespace mcs {

double ReservePrices::min_payment(const Task& task) const {
  double floor = 0.0;
  for (int k : task.requirement) {
    floor += per_item[static_cast<std::size_t>(k)];
  }
  return floor;
}

namespace {

double assignment_cost(const Instance& inst, const Assignment& a) {
  double cost = 0.0;
  for (int i = 0; i < inst.num_users(); ++i) {
    const User& u = inst.users[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < u.capability.size(); ++t) {
      if (a.x[static_cast<std::size_t>(i)]
             [static_cast<std::size_t>(u.capability[t])]) {
        cost += u.costs[t];
      }
    }
  }
  return cost;
}

double user_cost(const Instance& inst, const Assignment& a, int user) {
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

double exact_welfare(const Instance& inst) {
  Assignment a = solve_exact(inst);
  return social_welfare(inst, a);
}

}  // namespace

AuctionOutcome run_double_auction(const BidProfile& bids) {
  AuctionOutcome out;
  out.assignment = solve_exact(bids);
  out.welfare = social_welfare(bids, out.assignment);

  double total_value = 0.0;
  for (int j = 0; j < bids.num_tasks(); ++j) {
    if (out.assignment.z[static_cast<std::size_t>(j)]) {
      total_value += bids.tasks[static_cast<std::size_t>(j)].valuation;
    }
  }
  double total_cost = assignment_cost(bids, out.assignment);

  out.payments.assign(bids.tasks.size(), 0.0);
  out.participants.resize(bids.tasks.size());
  std::iota(out.participants.begin(), out.participants.end(), 0);
  for (int j = 0; j < bids.num_tasks(); ++j) {
    double welfare_without = exact_welfare(remove_task(bids, j));
    double value_others =
        total_value -
        (out.assignment.z[static_cast<std::size_t>(j)]
             ? bids.tasks[static_cast<std::size_t>(j)].valuation
             : 0.0);
    out.payments[static_cast<std::size_t>(j)] =
        welfare_without - value_others + total_cost;
  }

  out.rewards.assign(bids.users.size(), 0.0);
  for (int i = 0; i < bids.num_users(); ++i) {
    double welfare_without = exact_welfare(remove_user(bids, i));
    double cost_others = total_cost - user_cost(bids, out.assignment, i);
    out.rewards[static_cast<std::size_t>(i)] =
        total_value - cost_others - welfare_without;
  }

  out.platform_budget = platform_budget(out);
  return out;
}

AuctionOutcome run_reserve_auction(const BidProfile& bids,
                                   const ReservePrices& reserve) {
  if (reserve.per_item.size() != static_cast<std::size_t>(bids.num_items)) {
    throw ValidationError("reserve prices must cover every item");
  }

  // A task leaves when its reported valuation is strictly below its minimum
  // payment; ties stay.
  std::vector<int> stay;
  for (int j = 0; j < bids.num_tasks(); ++j) {
    const Task& t = bids.tasks[static_cast<std::size_t>(j)];
    if (t.valuation >= reserve.min_payment(t)) stay.push_back(j);
  }

  BidProfile reduced = keep_tasks(bids, stay);
  AuctionOutcome inner = run_double_auction(reduced);

  AuctionOutcome out;
  out.participants = stay;
  out.rewards = inner.rewards;
  out.welfare = inner.welfare;

  // Re-embed the survivor outcome into the original task index space.
  out.assignment.x = inner.assignment.x;
  out.assignment.y = inner.assignment.y;
  out.assignment.z.assign(bids.tasks.size(), 0);
  out.payments.assign(bids.tasks.size(), 0.0);
  for (std::size_t s = 0; s < stay.size(); ++s) {
    int j = stay[s];
    bool completed = inner.assignment.z[s] != 0;
    out.assignment.z[static_cast<std::size_t>(j)] = completed ? 1 : 0;
    if (completed) {
      double floor =
          reserve.min_payment(bids.tasks[static_cast<std::size_t>(j)]);
      out.payments[static_cast<std::size_t>(j)] =
          std::max(inner.payments[s], floor);
    }
  }

  out.platform_budget = platform_budget(out);
  return out;
}

double platform_budget(const AuctionOutcome& outcome) {
  double payments = 0.0;
  for (double p : outcome.payments) payments += p;
  double rewards = 0.0;
  for (double r : outcome.rewards) rewards += r;
  return payments - rewards;
}

}  // namespace mcs
