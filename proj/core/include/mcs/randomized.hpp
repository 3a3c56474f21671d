#pragma once

#include <cstdint>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

/// Hard cap on the schedulable pairs of an instance whose feasible integer
/// allocations are enumerated explicitly.
inline constexpr int kEnumerationMaxPairs = 16;

/// The decomposition program over the enumerated allocations has no
/// feasible probability mixture for the given fractional optimum.
class DecompositionInfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Fractional welfare-optimal auction: the allocation is the optimum of the
/// linear relaxation and the payments apply the same externality algebra as
/// the integral auction with every optimum replaced by the relaxation
/// optimum. `user_payments` is money paid to users, `task_charges` money
/// collected from tasks.
struct FractionalVcgOutcome {
  FractionalAssignment assignment;
  std::vector<double> user_payments;  // p*_i
  std::vector<double> task_charges;   // q*_j
  double total_value = 0.0;           // V* = sum z*_j v_j
  double total_cost = 0.0;            // C* = sum x*_{i,k} c_{i,k}
  double objective = 0.0;             // V* - C*
};

FractionalVcgOutcome fractional_vcg(const BidProfile& bids);

/// Every budget-feasible integral assignment of the instance, in ascending
/// lexicographic order of the scheduling vector over (user, item) pairs.
/// Throws CapError above kEnumerationMaxPairs pairs.
std::vector<Assignment> enumerate_allocations(const Instance& inst);

/// Probability mixture over integer allocations reproducing the scaled
/// fractional optimum: the lottery matches alpha times the fractional
/// scheduling and beta times the fractional completions, in expectation.
struct Decomposition {
  std::vector<Assignment> allocations;  // support only
  std::vector<double> weights;          // lambda, aligned with allocations
  double alpha = 1.0;
  double beta = 1.0;
};

/// Solves the scaled-decomposition program: maximize beta * V* - alpha * C*
/// over mixtures of the given allocations subject to the two expectation
/// identities and total probability one. Throws
/// DecompositionInfeasibleError when no mixture exists.
Decomposition decompose(const FractionalVcgOutcome& frac,
                        const std::vector<Assignment>& allocations,
                        const Instance& inst);

/// One sampled outcome of the lottery with its per-participant payments.
struct Realization {
  int allocation_index = 0;            // into the decomposition support
  std::vector<double> user_payments;   // p^l_i
  std::vector<double> task_charges;    // q^l_j
};

/// Samples an allocation by inverse CDF over the support order using a
/// seeded generator, then prices it: each user is paid its share of the
/// scaled fractional payment in proportion to its realized sensing cost,
/// and each task is charged in proportion to its realized value. A
/// participant with zero expected cost (or value) across the lottery pays
/// and receives nothing.
Realization realize(const Decomposition& dec, const FractionalVcgOutcome& frac,
                    const Instance& inst, std::uint64_t rng_seed);

}  // namespace mcs
