#pragma once

#include <cstdint>

#include "mcs/model.hpp"

namespace mcs {

/// Hard cap on the number of schedulable (user, item) pairs the exhaustive
/// solver will enumerate.
inline constexpr int kOracleMaxPairs = 22;

struct OracleResult {
  Assignment best;
  double welfare = 0.0;
  std::uint64_t explored = 0;  // budget-feasible scheduling vectors evaluated
};

/// Ground-truth solver: enumerates every budget-feasible scheduling vector
/// over the (user, item) pairs in ascending (user, item) order and returns a
/// welfare-maximizing assignment. Ties are broken toward the
/// lexicographically smallest scheduling vector. Throws CapError when the
/// instance has more than kOracleMaxPairs schedulable pairs.
OracleResult brute_force_optimal(const Instance& inst);

/// Exhaustive optimum of the market with one user removed.
OracleResult brute_force_excluding_user(const Instance& inst, int user);

/// Exhaustive optimum of the market with one task removed.
OracleResult brute_force_excluding_task(const Instance& inst, int task);

}  // namespace mcs
