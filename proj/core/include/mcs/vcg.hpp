#pragma once

#include <vector>

#include "mcs/model.hpp"

namespace mcs {

/// Per-item payment floors. A completed task pays at least the sum of the
/// floors over its required items.
struct ReservePrices {
  std::vector<double> per_item;

  static ReservePrices uniform(double value, int num_items) {
    return ReservePrices{std::vector<double>(
        static_cast<std::size_t>(num_items), value)};
  }

  /// Minimum payment of a task if completed: sum of floors over its items.
  double min_payment(const Task& task) const;
};

/// Result of one auction run. Payments are indexed by the original task ids
/// (a task that left the auction pays 0 and has z = 0); rewards by user id.
/// The assignment is the welfare-optimal one over the participating tasks;
/// its x and y live in the original user/item index space and z is reported
/// per original task, 0 for non-participants.
struct AuctionOutcome {
  Assignment assignment;
  std::vector<double> payments;
  std::vector<double> rewards;
  double platform_budget = 0.0;
  double welfare = 0.0;
  std::vector<int> participants;  // original ids of tasks that entered
};

/// Welfare-optimal double auction on the reported market: the assignment
/// maximizes reported welfare, each task pays the externality it imposes on
/// the rest of the market, and each user is rewarded its marginal
/// contribution. All quantities are computed from the reports.
AuctionOutcome run_double_auction(const BidProfile& bids);

/// Reserve-price variant: tasks whose reported valuation falls strictly
/// below their minimum payment leave before the assignment; completed
/// survivors pay at least the floor. Truthful but not welfare-optimal.
AuctionOutcome run_reserve_auction(const BidProfile& bids,
                                   const ReservePrices& reserve);

/// Total payments collected minus total rewards paid.
double platform_budget(const AuctionOutcome& outcome);

}  // namespace mcs
