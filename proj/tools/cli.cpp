#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcs/assign.hpp"
#include "mcs/harness.hpp"
#include "mcs/json_io.hpp"
#include "mcs/randomized.hpp"
#include "mcs/vcg.hpp"

namespace mcs {

namespace {

struct CommonArgs {
  std::string input;
  std::string output;
  GenParams gen;
};

void add_gen_flags(CLI::App* cmd, GenParams& g) {
  cmd->add_option("--seed", g.seed, "Generator seed")
      ->capture_default_str();
  cmd->add_option("--k", g.num_items, "Number of target data items")
      ->capture_default_str();
  cmd->add_option("--users", g.num_users, "Number of users")
      ->capture_default_str();
  cmd->add_option("--tasks", g.num_tasks, "Number of tasks")
      ->capture_default_str();
  cmd->add_option("--items-per-task", g.items_per_task,
                  "Items drawn per task requirement")
      ->capture_default_str();
  cmd->add_option("--area-km", g.area_km, "Side of the deployment square")
      ->capture_default_str();
  cmd->add_option("--radius-km", g.sense_radius_km, "Sensing radius")
      ->capture_default_str();
  cmd->add_option("--cost-min", g.cost_min, "Sensing cost lower bound")
      ->capture_default_str();
  cmd->add_option("--cost-max", g.cost_max, "Sensing cost upper bound")
      ->capture_default_str();
  cmd->add_option("--budget-min", g.budget_min, "Budget lower bound")
      ->capture_default_str();
  cmd->add_option("--budget-max", g.budget_max, "Budget upper bound")
      ->capture_default_str();
  cmd->add_option("--item-value-min", g.item_value_min,
                  "Per-item valuation lower bound")
      ->capture_default_str();
  cmd->add_option("--item-value-max", g.item_value_max,
                  "Per-item valuation upper bound")
      ->capture_default_str();
}

void add_io_flags(CLI::App* cmd, CommonArgs& args, bool with_input) {
  if (with_input) {
    cmd->add_option("--input", args.input,
                    "Instance JSON file (generated from the seed flags when "
                    "omitted)");
  }
  cmd->add_option("--output", args.output,
                  "Write data output to this file instead of stdout");
}

Instance obtain_instance(const CommonArgs& args) {
  if (!args.input.empty()) return load_instance_file(args.input);
  return generate(args.gen);
}

void emit(const std::string& output_path, const std::string& data) {
  if (output_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw Error("cannot write output file: " + output_path);
  out << data;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (out.empty()) throw ValidationError("empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (out.empty()) throw ValidationError("empty list");
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Crowd-sensing market toolkit: optimal task-data-user assignment "
      "with data reuse, truthful double auctions, and experiment drivers"};
  app.require_subcommand(1);

  CommonArgs gen_args, solve_args, auction_args, reserve_args, rand_args;
  double reserve_pi = 0.0;

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance JSON");
  add_gen_flags(gen, gen_args.gen);
  add_io_flags(gen, gen_args, /*with_input=*/false);

  CLI::App* solve = app.add_subcommand(
      "solve", "Welfare-optimal assignment of one instance");
  add_gen_flags(solve, solve_args.gen);
  add_io_flags(solve, solve_args, /*with_input=*/true);

  CLI::App* auction = app.add_subcommand(
      "auction", "Truthful double auction on one instance");
  add_gen_flags(auction, auction_args.gen);
  add_io_flags(auction, auction_args, /*with_input=*/true);

  CLI::App* reserve = app.add_subcommand(
      "reserve-auction", "Double auction with a uniform per-item floor");
  add_gen_flags(reserve, reserve_args.gen);
  add_io_flags(reserve, reserve_args, /*with_input=*/true);
  reserve->add_option("--pi", reserve_pi, "Uniform per-item reserve price")
      ->capture_default_str();

  CLI::App* randomized = app.add_subcommand(
      "randomized",
      "Randomized-baseline decomposition of one small instance");
  add_gen_flags(randomized, rand_args.gen);
  add_io_flags(randomized, rand_args, /*with_input=*/true);

  CommonArgs wg_args;
  std::string wg_k_list = "5,10,15,20";
  int wg_trials = 200;
  int wg_jobs = 0;
  std::string wg_format = "csv";
  std::string wg_summary;
  CLI::App* welfare_gain = app.add_subcommand(
      "welfare-gain", "Welfare with vs without data reuse across item counts");
  add_gen_flags(welfare_gain, wg_args.gen);
  add_io_flags(welfare_gain, wg_args, /*with_input=*/false);
  welfare_gain->add_option("--k-list", wg_k_list,
                           "Comma-separated item counts")
      ->capture_default_str();
  welfare_gain->add_option("--trials", wg_trials, "Trials per item count")
      ->capture_default_str();
  welfare_gain->add_option("--jobs", wg_jobs,
                           "Worker threads (0 = logical cores)")
      ->capture_default_str();
  welfare_gain->add_option("--format", wg_format, "csv (records) or json (summary)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  welfare_gain->add_option("--summary", wg_summary,
                           "Also write the JSON summary to this file");

  CommonArgs rs_args;
  std::string rs_grid = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0,1.1,1.2,1.3,1.4,1.5";
  int rs_trials = 200;
  int rs_jobs = 0;
  std::string rs_format = "csv";
  std::string rs_summary;
  CLI::App* sweep = app.add_subcommand(
      "reserve-sweep", "Reserve-price sweep: welfare and platform budget");
  add_gen_flags(sweep, rs_args.gen);
  add_io_flags(sweep, rs_args, /*with_input=*/false);
  sweep->add_option("--pi-grid", rs_grid, "Comma-separated ascending floors")
      ->capture_default_str();
  sweep->add_option("--trials", rs_trials, "Trials per floor")
      ->capture_default_str();
  sweep->add_option("--jobs", rs_jobs, "Worker threads (0 = logical cores)")
      ->capture_default_str();
  sweep->add_option("--format", rs_format, "csv (records) or json (summary)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--summary", rs_summary,
                    "Also write the JSON summary to this file");

  CommonArgs cr_args;
  cr_args.gen.num_users = 3;
  cr_args.gen.num_tasks = 3;
  cr_args.gen.num_items = 6;
  cr_args.gen.items_per_task = 2;
  int cr_trials = 100;
  int cr_jobs = 0;
  std::string cr_format = "csv";
  std::string cr_summary;
  CLI::App* compare = app.add_subcommand(
      "compare-randomized",
      "Exact double auction vs the randomized baseline (small sizes: "
      "the baseline enumerates every feasible allocation)");
  add_gen_flags(compare, cr_args.gen);
  add_io_flags(compare, cr_args, /*with_input=*/false);
  compare->add_option("--trials", cr_trials, "Number of trials")
      ->capture_default_str();
  compare->add_option("--jobs", cr_jobs, "Worker threads (0 = logical cores)")
      ->capture_default_str();
  compare->add_option("--format", cr_format, "csv (records) or json (summary)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  compare->add_option("--summary", cr_summary,
                      "Also write the JSON summary to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      Instance inst = generate(gen_args.gen);
      emit(gen_args.output, instance_to_json(inst));
    } else if (solve->parsed()) {
      Instance inst = obtain_instance(solve_args);
      Assignment a = solve_exact(inst);
      emit(solve_args.output, assignment_to_json(inst, a));
    } else if (auction->parsed()) {
      Instance inst = obtain_instance(auction_args);
      emit(auction_args.output, outcome_to_json(run_double_auction(inst)));
    } else if (reserve->parsed()) {
      Instance inst = obtain_instance(reserve_args);
      AuctionOutcome outcome = run_reserve_auction(
          inst, ReservePrices::uniform(reserve_pi, inst.num_items));
      emit(reserve_args.output, outcome_to_json(outcome));
    } else if (randomized->parsed()) {
      Instance inst = obtain_instance(rand_args);
      FractionalVcgOutcome frac = fractional_vcg(inst);
      std::vector<Assignment> allocations = enumerate_allocations(inst);
      Decomposition dec = decompose(frac, allocations, inst);
      emit(rand_args.output, decomposition_to_json(dec));
    } else if (welfare_gain->parsed()) {
      WelfareGainResult result =
          welfare_gain_experiment(parse_int_list(wg_k_list), wg_trials,
                                  wg_args.gen.seed, wg_args.gen, wg_jobs);
      std::string summary =
          summary_to_json(result, wg_trials, wg_args.gen.seed);
      emit(wg_args.output,
           wg_format == "json" ? summary : records_to_csv(result.records));
      if (!wg_summary.empty()) emit(wg_summary, summary);
    } else if (sweep->parsed()) {
      ReserveSweepResult result =
          reserve_sweep(parse_double_list(rs_grid), rs_trials,
                        rs_args.gen.seed, rs_args.gen, rs_jobs);
      std::string summary =
          summary_to_json(result, rs_trials, rs_args.gen.seed);
      emit(rs_args.output,
           rs_format == "json" ? summary : records_to_csv(result.records));
      if (!rs_summary.empty()) emit(rs_summary, summary);
    } else if (compare->parsed()) {
      CompareRandomizedResult result = compare_randomized(
          cr_trials, cr_args.gen.seed, cr_args.gen, cr_jobs);
      std::string summary = summary_to_json(result, cr_args.gen.seed);
      emit(cr_args.output,
           cr_format == "json" ? summary : records_to_csv(result.records));
      if (!cr_summary.empty()) emit(cr_summary, summary);
    }
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DecompositionInfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace mcs
