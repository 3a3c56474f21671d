#include "mcs/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mcs/assign.hpp"
#include "mcs/randomized.hpp"
#include "mcs/vcg.hpp"

namespace mcs {

namespace {

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string opt_cell(const std::optional<double>& v) {
  return v ? fmt(*v, 6) : std::string();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
  }
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (std::thread& t : workers) t.join();
}

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
  int count = 0;
};

Stats stats_of(const std::vector<double>& xs) {
  Stats s;
  s.count = static_cast<int>(xs.size());
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / s.count;
  if (s.count > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / (s.count - 1));
  }
  return s;
}

/// Expected welfare of the randomized baseline on one bid instance, or
/// nothing when the decomposition is infeasible.
std::optional<double> randomized_expected_welfare(const Instance& inst) {
  FractionalVcgOutcome frac = fractional_vcg(inst);
  std::vector<Assignment> allocations = enumerate_allocations(inst);
  Decomposition dec = decompose(frac, allocations, inst);
  return dec.beta * frac.total_value - dec.alpha * frac.total_cost;
}

}  // namespace

std::string record_csv_header() {
  return "experiment,seed,K,trial,pi,welfare_reuse,welfare_noreuse,"
         "welfare_randomized,gain_percent,total_payments,total_rewards,"
         "platform_budget,runtime_ms";
}

std::string record_to_csv(const ExperimentRecord& rec) {
  std::ostringstream os;
  os << rec.experiment << ',' << rec.seed << ',' << rec.k_items << ','
     << rec.trial << ',' << opt_cell(rec.pi) << ','
     << opt_cell(rec.welfare_reuse) << ',' << opt_cell(rec.welfare_noreuse)
     << ',' << opt_cell(rec.welfare_randomized) << ','
     << opt_cell(rec.gain_percent) << ',' << opt_cell(rec.total_payments)
     << ',' << opt_cell(rec.total_rewards) << ','
     << opt_cell(rec.platform_budget) << ',' << fmt(rec.runtime_ms, 3);
  return os.str();
}

ExperimentRecord record_from_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  if (cells.size() != 13) {
    throw ValidationError("expected 13 CSV cells, got " +
                          std::to_string(cells.size()));
  }
  auto opt = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    return std::stod(s);
  };
  ExperimentRecord rec;
  rec.experiment = cells[0];
  rec.seed = std::stoull(cells[1]);
  rec.k_items = std::stoi(cells[2]);
  rec.trial = std::stoi(cells[3]);
  rec.pi = opt(cells[4]);
  rec.welfare_reuse = opt(cells[5]);
  rec.welfare_noreuse = opt(cells[6]);
  rec.welfare_randomized = opt(cells[7]);
  rec.gain_percent = opt(cells[8]);
  rec.total_payments = opt(cells[9]);
  rec.total_rewards = opt(cells[10]);
  rec.platform_budget = opt(cells[11]);
  rec.runtime_ms = std::stod(cells[12]);
  return rec;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream os;
  os << record_csv_header() << '\n';
  for (const ExperimentRecord& rec : records) os << record_to_csv(rec) << '\n';
  return os.str();
}

WelfareGainResult welfare_gain_experiment(const std::vector<int>& k_list,
                                          int trials, std::uint64_t base_seed,
                                          const GenParams& base, int jobs) {
  if (trials < 1) throw ValidationError("trials must be >= 1");
  WelfareGainResult result;
  int total = static_cast<int>(k_list.size()) * trials;
  result.records.resize(static_cast<std::size_t>(total));

  parallel_for(total, jobs, [&](int idx) {
    int k_index = idx / trials;
    int trial = idx % trials;
    auto start = std::chrono::steady_clock::now();

    GenParams params = base;
    params.num_items = k_list[static_cast<std::size_t>(k_index)];
    params.seed = base_seed + static_cast<std::uint64_t>(trial) +
                  10000ULL * static_cast<std::uint64_t>(k_index);
    Instance inst = generate(params);
    Instance no_reuse = no_reuse_transform(inst);

    ExperimentRecord rec;
    rec.experiment = "welfare-gain";
    rec.seed = params.seed;
    rec.k_items = params.num_items;
    rec.trial = trial;
    rec.welfare_reuse = social_welfare(inst, solve_exact(inst));
    rec.welfare_noreuse = social_welfare(no_reuse, solve_exact(no_reuse));
    if (*rec.welfare_noreuse > kEps) {
      rec.gain_percent =
          100.0 * (*rec.welfare_reuse - *rec.welfare_noreuse) /
          *rec.welfare_noreuse;
    } else if (*rec.welfare_reuse <= kEps) {
      rec.gain_percent = 0.0;  // both markets are worthless: no gain
    }  // else: gain over a zero base is undefined; leave the cell empty

    if (inst.num_pairs() <= kEnumerationMaxPairs) {
      try {
        rec.welfare_randomized = randomized_expected_welfare(inst);
      } catch (const DecompositionInfeasibleError&) {
      }
    }

    rec.runtime_ms = elapsed_ms(start);
    result.records[static_cast<std::size_t>(idx)] = std::move(rec);
  });

  for (std::size_t k_index = 0; k_index < k_list.size(); ++k_index) {
    std::vector<double> reuse, noreuse, gains;
    for (int t = 0; t < trials; ++t) {
      const ExperimentRecord& rec =
          result.records[k_index * static_cast<std::size_t>(trials) +
                         static_cast<std::size_t>(t)];
      reuse.push_back(*rec.welfare_reuse);
      noreuse.push_back(*rec.welfare_noreuse);
      if (rec.gain_percent) gains.push_back(*rec.gain_percent);
    }
    WelfareGainSummary s;
    s.k_items = k_list[k_index];
    s.trials = trials;
    Stats sr = stats_of(reuse);
    s.mean_welfare_reuse = sr.mean;
    s.stddev_welfare_reuse = sr.stddev;
    Stats sn = stats_of(noreuse);
    s.mean_welfare_noreuse = sn.mean;
    s.stddev_welfare_noreuse = sn.stddev;
    Stats sg = stats_of(gains);
    s.mean_gain_percent = sg.mean;
    s.stddev_gain_percent = sg.stddev;
    s.gain_defined = sg.count;
    result.per_k.push_back(s);
  }
  return result;
}

ReserveSweepResult reserve_sweep(const std::vector<double>& pi_grid,
                                 int trials, std::uint64_t base_seed,
                                 const GenParams& base, int jobs) {
  if (trials < 1) throw ValidationError("trials must be >= 1");
  for (std::size_t g = 1; g < pi_grid.size(); ++g) {
    if (pi_grid[g] <= pi_grid[g - 1]) {
      throw ValidationError("pi grid must be strictly ascending");
    }
  }

  ReserveSweepResult result;
  int total = static_cast<int>(pi_grid.size()) * trials;
  result.records.resize(static_cast<std::size_t>(total));

  parallel_for(total, jobs, [&](int idx) {
    int pi_index = idx / trials;
    int trial = idx % trials;
    auto start = std::chrono::steady_clock::now();

    GenParams params = base;
    params.seed = base_seed + static_cast<std::uint64_t>(trial);
    Instance inst = generate(params);
    double pi = pi_grid[static_cast<std::size_t>(pi_index)];
    AuctionOutcome outcome =
        run_reserve_auction(inst, ReservePrices::uniform(pi, inst.num_items));

    double payments = 0.0;
    for (double p : outcome.payments) payments += p;
    double rewards = 0.0;
    for (double r : outcome.rewards) rewards += r;

    ExperimentRecord rec;
    rec.experiment = "reserve-sweep";
    rec.seed = params.seed;
    rec.k_items = params.num_items;
    rec.trial = trial;
    rec.pi = pi;
    rec.welfare_reuse = outcome.welfare;
    rec.total_payments = payments;
    rec.total_rewards = rewards;
    rec.platform_budget = outcome.platform_budget;
    rec.runtime_ms = elapsed_ms(start);
    result.records[static_cast<std::size_t>(idx)] = std::move(rec);
  });

  for (std::size_t pi_index = 0; pi_index < pi_grid.size(); ++pi_index) {
    std::vector<double> welfare, payments, rewards, budget;
    for (int t = 0; t < trials; ++t) {
      const ExperimentRecord& rec =
          result.records[pi_index * static_cast<std::size_t>(trials) +
                         static_cast<std::size_t>(t)];
      welfare.push_back(*rec.welfare_reuse);
      payments.push_back(*rec.total_payments);
      rewards.push_back(*rec.total_rewards);
      budget.push_back(*rec.platform_budget);
    }
    ReserveSweepSummary s;
    s.pi = pi_grid[pi_index];
    s.mean_welfare = stats_of(welfare).mean;
    s.mean_total_payments = stats_of(payments).mean;
    s.mean_total_rewards = stats_of(rewards).mean;
    s.mean_platform_budget = stats_of(budget).mean;
    result.per_pi.push_back(s);
    if (!result.balancing_pi && s.mean_platform_budget >= 0.0) {
      result.balancing_pi = s.pi;
    }
  }
  return result;
}

CompareRandomizedResult compare_randomized(int trials, std::uint64_t base_seed,
                                           const GenParams& params, int jobs) {
  if (trials < 1) throw ValidationError("trials must be >= 1");
  CompareRandomizedResult result;
  result.trials = trials;
  result.records.resize(static_cast<std::size_t>(trials));
  std::atomic<int> infeasible{0};
  std::atomic<int> over_cap{0};

  parallel_for(trials, jobs, [&](int trial) {
    auto start = std::chrono::steady_clock::now();
    GenParams p = params;
    p.seed = base_seed + static_cast<std::uint64_t>(trial);
    Instance inst = generate(p);

    ExperimentRecord rec;
    rec.experiment = "compare-randomized";
    rec.seed = p.seed;
    rec.k_items = p.num_items;
    rec.trial = trial;
    rec.welfare_reuse = social_welfare(inst, solve_exact(inst));
    if (inst.num_pairs() > kEnumerationMaxPairs) {
      over_cap.fetch_add(1);
    } else {
      try {
        rec.welfare_randomized = randomized_expected_welfare(inst);
      } catch (const DecompositionInfeasibleError&) {
        infeasible.fetch_add(1);
      }
    }
    rec.runtime_ms = elapsed_ms(start);
    result.records[static_cast<std::size_t>(trial)] = std::move(rec);
  });

  result.decomposition_infeasible = infeasible.load();
  result.over_cap = over_cap.load();
  std::vector<double> ratios;
  for (const ExperimentRecord& rec : result.records) {
    if (rec.welfare_randomized && *rec.welfare_reuse > kEps) {
      ratios.push_back(*rec.welfare_randomized / *rec.welfare_reuse);
    }
  }
  Stats s = stats_of(ratios);
  result.mean_ratio = s.mean;
  result.ratio_defined = s.count;
  return result;
}

std::string summary_to_json(const WelfareGainResult& result, int trials,
                            std::uint64_t base_seed) {
  nlohmann::json j;
  j["experiment"] = "welfare-gain";
  j["trials"] = trials;
  j["base_seed"] = base_seed;
  j["per_k"] = nlohmann::json::array();
  for (const WelfareGainSummary& s : result.per_k) {
    nlohmann::json e;
    e["k"] = s.k_items;
    e["mean_welfare_reuse"] = s.mean_welfare_reuse;
    e["stddev_welfare_reuse"] = s.stddev_welfare_reuse;
    e["mean_welfare_noreuse"] = s.mean_welfare_noreuse;
    e["stddev_welfare_noreuse"] = s.stddev_welfare_noreuse;
    e["mean_gain_percent"] = s.mean_gain_percent;
    e["stddev_gain_percent"] = s.stddev_gain_percent;
    e["gain_defined"] = s.gain_defined;
    j["per_k"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string summary_to_json(const ReserveSweepResult& result, int trials,
                            std::uint64_t base_seed) {
  nlohmann::json j;
  j["experiment"] = "reserve-sweep";
  j["trials"] = trials;
  j["base_seed"] = base_seed;
  j["per_pi"] = nlohmann::json::array();
  for (const ReserveSweepSummary& s : result.per_pi) {
    nlohmann::json e;
    e["pi"] = s.pi;
    e["mean_welfare"] = s.mean_welfare;
    e["mean_total_payments"] = s.mean_total_payments;
    e["mean_total_rewards"] = s.mean_total_rewards;
    e["mean_platform_budget"] = s.mean_platform_budget;
    j["per_pi"].push_back(std::move(e));
  }
  if (result.balancing_pi) {
    j["balancing_pi"] = *result.balancing_pi;
  } else {
    j["balancing_pi"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string summary_to_json(const CompareRandomizedResult& result,
                            std::uint64_t base_seed) {
  nlohmann::json j;
  j["experiment"] = "compare-randomized";
  j["trials"] = result.trials;
  j["base_seed"] = base_seed;
  j["mean_ratio"] = result.mean_ratio;
  j["ratio_defined"] = result.ratio_defined;
  j["decomposition_infeasible"] = result.decomposition_infeasible;
  j["over_cap"] = result.over_cap;
  return j.dump(2) + "\n";
}

}  // namespace mcs
