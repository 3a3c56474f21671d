#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcs/simgen.hpp"

namespace mcs {

/// One seeded trial's metrics. Fields not applicable to the experiment stay
/// empty and serialize as empty CSV cells. Records are immutable once
/// emitted; gain_percent is recomputable from the welfare columns.
struct ExperimentRecord {
  std::string experiment;
  std::uint64_t seed = 0;
  int k_items = 0;
  int trial = 0;
  std::optional<double> pi;
  std::optional<double> welfare_reuse;
  std::optional<double> welfare_noreuse;
  std::optional<double> welfare_randomized;
  std::optional<double> gain_percent;
  std::optional<double> total_payments;
  std::optional<double> total_rewards;
  std::optional<double> platform_budget;
  double runtime_ms = 0.0;
};

/// Exact CSV column order shared by every experiment.
std::string record_csv_header();

/// One CSV line; reals are rounded to 6 decimals (runtime to 3).
std::string record_to_csv(const ExperimentRecord& rec);

/// Parses one CSV line produced by record_to_csv.
ExperimentRecord record_from_csv(const std::string& line);

std::string records_to_csv(const std::vector<ExperimentRecord>& records);

struct WelfareGainSummary {
  int k_items = 0;
  int trials = 0;
  double mean_welfare_reuse = 0.0, stddev_welfare_reuse = 0.0;
  double mean_welfare_noreuse = 0.0, stddev_welfare_noreuse = 0.0;
  double mean_gain_percent = 0.0, stddev_gain_percent = 0.0;
  int gain_defined = 0;  // trials with a well-defined gain
};

struct WelfareGainResult {
  std::vector<ExperimentRecord> records;
  std::vector<WelfareGainSummary> per_k;
};

/// Welfare with and without data reuse across item counts. Per-trial seed is
/// base_seed + trial + 10000 * (index of K in k_list), so mechanisms compare
/// on identical instances. The randomized baseline runs only when the
/// instance is under the allocation-enumeration cap. `base` supplies every
/// generator parameter except num_items and seed.
WelfareGainResult welfare_gain_experiment(const std::vector<int>& k_list,
                                          int trials, std::uint64_t base_seed,
                                          const GenParams& base, int jobs = 1);

struct ReserveSweepSummary {
  double pi = 0.0;
  double mean_welfare = 0.0;
  double mean_total_payments = 0.0;
  double mean_total_rewards = 0.0;
  double mean_platform_budget = 0.0;
};

struct ReserveSweepResult {
  std::vector<ExperimentRecord> records;
  std::vector<ReserveSweepSummary> per_pi;
  std::optional<double> balancing_pi;  // smallest grid pi with mean budget >= 0
};

/// Reserve-price sweep with truthful bids. The same uniform floor is applied
/// to every item; trials are paired across the grid (per-trial seed =
/// base_seed + trial). pi_grid must be ascending.
ReserveSweepResult reserve_sweep(const std::vector<double>& pi_grid,
                                 int trials, std::uint64_t base_seed,
                                 const GenParams& base, int jobs = 1);

struct CompareRandomizedResult {
  std::vector<ExperimentRecord> records;
  double mean_ratio = 0.0;  // expected randomized welfare / exact welfare
  int ratio_defined = 0;
  int decomposition_infeasible = 0;
  int over_cap = 0;
  int trials = 0;
};

/// Exact double-auction welfare vs the expected welfare of the randomized
/// baseline on the same bid instance. Requires generator parameters small
/// enough for allocation enumeration; oversized trials are counted and
/// skipped.
CompareRandomizedResult compare_randomized(int trials, std::uint64_t base_seed,
                                           const GenParams& params,
                                           int jobs = 1);

std::string summary_to_json(const WelfareGainResult& result, int trials,
                            std::uint64_t base_seed);
std::string summary_to_json(const ReserveSweepResult& result, int trials,
                            std::uint64_t base_seed);
std::string summary_to_json(const CompareRandomizedResult& result,
                            std::uint64_t base_seed);

}  // namespace mcs
