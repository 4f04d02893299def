// Copyright 2026 The cranauction Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: single auctions, experiment sweeps, standalone
// winner determination and the oracle self-test.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cranauction/io.hpp"
#include "cranauction/metrics.hpp"
#include "cranauction/oracles.hpp"
#include "cranauction/sweep.hpp"

namespace {

using namespace cranauction;

WdpOptions wdp_options(std::int64_t time_budget_ms) {
  WdpOptions options;
  if (time_budget_ms > 0) {
    options.time_budget = std::chrono::milliseconds(time_budget_ms);
  }
  return options;
}

SweepSpec config_or_default(const std::string& path) {
  if (path.empty()) {
    SweepSpec spec;
    spec.base_bidder.value_per_kbps = 1.0;
    spec.base_bidder.r_min = 100'000.0;
    return spec;
  }
  return load_config(path);
}

int cmd_run(const std::string& config, std::optional<double> r_min, double alpha,
            std::optional<std::uint64_t> seed, const std::string& trace,
            std::int64_t time_budget_ms) {
  SweepSpec spec = config_or_default(config);
  if (seed) {
    spec.base_market.rng_seed = *seed;
  }
  const Kbps rate = r_min.value_or(spec.base_bidder.r_min);
  const auto roster = make_roster(spec, rate, 0, 0);
  const Currency p_antenna = alpha * spec.base_bidder.value_per_kbps;
  const AuctionRun run =
      run_auction(spec.base_market, roster, p_antenna, wdp_options(time_budget_ms));

  std::cout << "r_min,alpha," << kOutcomeCsvHeader << '\n';
  fmt::print(std::cout, "{},{},", rate, alpha);
  write_outcome_row(std::cout, run.outcome);
  std::cout << '\n';
  for (const auto& bid : run.outcome.allocation.winning_bids) {
    fmt::print(std::cout, "# winner {} antennas={} bandwidth={} cost={}\n",
               bid.bidder_id.value, bid.package.antennas, bid.package.bandwidth,
               bid.package.cost);
  }

  if (!trace.empty()) {
    if (trace == "-") {
      write_round_trace(std::cout, run.clock, roster);
    } else {
      std::ofstream out(trace);
      if (!out) {
        throw std::runtime_error("cannot open trace file " + trace);
      }
      write_round_trace(out, run.clock, roster);
    }
  }
  return 0;
}

int cmd_sweep(const std::string& config, const std::string& out_dir,
              std::optional<std::uint64_t> seed, std::int64_t time_budget_ms, unsigned jobs,
              bool check) {
  SweepSpec spec = load_config(config);
  if (seed) {
    spec.base_market.rng_seed = *seed;
  }
  SweepOptions options;
  options.wdp = wdp_options(time_budget_ms);
  options.jobs = jobs;
  options.check_clock_invariants = check;
  const SweepGrid grid = run_sweep(spec, options);
  for (const auto& path : emit_matrices(grid, out_dir)) {
    std::cout << "wrote " << path.string() << '\n';
  }
  return 0;
}

int cmd_wdp(const std::string& file, Kilohertz total_spectrum, double p_spectrum,
            double p_antenna, std::int64_t time_budget_ms, bool brute_force) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open " + file);
  }
  const WdpInstance instance = read_wdp_instance(in, total_spectrum, p_spectrum, p_antenna);
  const Allocation allocation = brute_force ? brute_force_wdp(instance)
                                            : solve_wdp(instance, wdp_options(time_budget_ms));
  write_allocation(std::cout, instance, allocation);
  return 0;
}

int cmd_check(std::uint64_t seed, std::size_t bidder_cases, std::size_t wdp_cases) {
  const auto report = oracles::run_oracle_checks(seed, bidder_cases, wdp_cases);
  for (const auto& failure : report.failures) {
    std::cout << "FAIL " << failure << '\n';
  }
  fmt::print(std::cout, "bidder optimizer vs exhaustive scan: {}/{} agree\n",
             report.bidder_cases - report.bidder_mismatches, report.bidder_cases);
  fmt::print(std::cout, "branch-on-bids vs subset enumeration: {}/{} agree\n",
             report.wdp_cases - report.wdp_mismatches, report.wdp_cases);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combined antenna and spectrum clock auction simulator"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::int64_t time_budget_ms = 0;

  auto* run = app.add_subcommand("run", "Run a single auction and print its outcome");
  std::string run_config;
  std::optional<double> run_rmin;
  double run_alpha = 0.0;
  std::string trace;
  run->add_option("-c,--config", run_config, "Configuration file ([market], [bidder])");
  run->add_option("--r-min", run_rmin, "Override the bidders' required rate (Kbps)");
  run->add_option("--alpha", run_alpha,
                  "Antenna price as a fraction of value_per_kbps")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--seed", seed, "Override market rng_seed");
  run->add_option("--trace", trace, "Write the per-round trace CSV here ('-' for stdout)");
  run->add_option("--time-budget-ms", time_budget_ms, "Anytime budget for winner determination");

  auto* sweep = app.add_subcommand("sweep", "Run the rate x antenna-cost grid");
  std::string sweep_config;
  std::string out_dir = "sweep_out";
  unsigned jobs = 1;
  bool check_clock = false;
  sweep->add_option("-c,--config", sweep_config, "Configuration file with a [sweep] section")
      ->required();
  sweep->add_option("--out-dir", out_dir, "Directory for sweep.csv and the matrices");
  sweep->add_option("--seed", seed, "Override market rng_seed");
  sweep->add_option("--time-budget-ms", time_budget_ms, "Anytime budget per cell");
  sweep->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--check", check_clock, "Verify clock invariants in every cell");

  auto* wdp = app.add_subcommand("wdp", "Solve a standalone winner determination instance");
  std::string wdp_file;
  Kilohertz total_spectrum = 50'000;
  double p_spectrum = 0.0;
  double p_antenna = 0.0;
  bool brute_force = false;
  wdp->add_option("instance", wdp_file, "CSV with header bidder_id,antennas,bandwidth")
      ->required();
  wdp->add_option("--total-spectrum", total_spectrum, "Spectrum on offer (kHz)");
  wdp->add_option("--p-spectrum", p_spectrum, "Price per kHz of the bids' round");
  wdp->add_option("--p-antenna", p_antenna, "Price per antenna");
  wdp->add_option("--time-budget-ms", time_budget_ms, "Anytime budget");
  wdp->add_flag("--brute-force", brute_force, "Use exhaustive enumeration (<= 20 bids)");

  auto* check = app.add_subcommand("check", "Oracle-equivalence self test");
  std::uint64_t check_seed = 1;
  std::size_t bidder_cases = 10'000;
  std::size_t wdp_cases = 1'000;
  check->add_option("--seed", check_seed, "Seed for the random instances");
  check->add_option("--bidder-cases", bidder_cases, "Random bidder instances");
  check->add_option("--wdp-cases", wdp_cases, "Random WDP instances (<= 15 bids)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(run_config, run_rmin, run_alpha, seed, trace, time_budget_ms);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_config, out_dir, seed, time_budget_ms, jobs, check_clock);
    }
    if (wdp->parsed()) {
      return cmd_wdp(wdp_file, total_spectrum, p_spectrum, p_antenna, time_budget_ms,
                     brute_force);
    }
    if (check->parsed()) {
      return cmd_check(check_seed, bidder_cases, wdp_cases);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
