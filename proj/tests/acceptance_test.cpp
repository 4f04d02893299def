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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "cranauction/io.hpp"
#include "cranauction/market_model.hpp"
#include "cranauction/oracles.hpp"
#include "cranauction/sweep.hpp"

namespace {

using namespace cranauction;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string long_form(const SweepGrid& grid) {
  std::ostringstream os;
  write_long_form(os, grid);
  return os.str();
}

const SweepSpec& default_spec() {
  static const SweepSpec spec =
      load_config(CRANAUCTION_SOURCE_DIR "/config/default_sweep.ini");
  return spec;
}

// The default sweep, run once with clock invariants asserted in every cell.
struct CheckedSweep {
  SweepGrid grid;
  double seconds = 0.0;
  std::string error;
};

const CheckedSweep& checked_sweep() {
  static const CheckedSweep result = [] {
    CheckedSweep out;
    SweepOptions options;
    options.check_clock_invariants = true;
    const auto start = Clock::now();
    try {
      out.grid = run_sweep(default_spec(), options);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
    out.seconds = seconds_since(start);
    return out;
  }();
  return result;
}

Verdict substitution_ratio() {
  const RateModel model(10.0);
  const double r = 1'000.0;
  const double ratio = model.required_bandwidth_exact(r, 10) / model.required_bandwidth_exact(r, 1);
  const double expected = std::log2(11.0) / std::log2(101.0);
  return {std::abs(ratio - 0.5196) <= 0.01,
          fmt::format("B(r,10)/B(r,1) = {:.5f}, closed form {:.5f}", ratio, expected)};
}

Verdict bidder_oracle() {
  const auto start = Clock::now();
  const auto report = oracles::run_oracle_checks(20'260'101, 10'000, 0);
  const double secs = seconds_since(start);
  return {report.bidder_cases >= 10'000 && report.bidder_mismatches == 0 && secs < 10.0,
          fmt::format("{} cases, {} mismatches, {:.2f} s", report.bidder_cases,
                      report.bidder_mismatches, secs)};
}

Verdict wdp_oracle() {
  const auto start = Clock::now();
  const auto report = oracles::run_oracle_checks(20'260'102, 0, 1'000, 15);
  const double secs = seconds_since(start);
  return {report.wdp_cases >= 1'000 && report.wdp_mismatches == 0 && secs < 60.0,
          fmt::format("{} instances (<= 15 bids), {} mismatches, {:.2f} s", report.wdp_cases,
                      report.wdp_mismatches, secs)};
}

Verdict clock_invariants() {
  const auto& sweep = checked_sweep();
  if (!sweep.error.empty()) {
    return {false, sweep.error};
  }
  std::size_t rounds = 0;
  for (const auto& cell : sweep.grid.cells) {
    rounds += cell.outcome.clock_rounds;
  }
  return {true, fmt::format("{} cells, {} rounds checked, {:.2f} s", sweep.grid.cells.size(),
                            rounds, sweep.seconds)};
}

// Counts adjacent pairs along a row (fixed rate, increasing alpha) where
// `bad(before, after)` holds.
std::size_t row_violations(const SweepGrid& grid, std::size_t row,
                           const std::function<bool(const AuctionOutcome&,
                                                    const AuctionOutcome&)>& bad) {
  std::size_t count = 0;
  for (std::size_t c = 1; c < grid.cols(); ++c) {
    if (bad(grid.at(row, c - 1).outcome, grid.at(row, c).outcome)) {
      ++count;
    }
  }
  return count;
}

bool winner_drops(const SweepGrid& grid, std::size_t row) {
  return row_violations(grid, row, [](const auto& a, const auto& b) {
           return b.num_winners < a.num_winners;
         }) > 0;
}

Verdict trend_suite() {
  const auto& sweep = checked_sweep();
  if (!sweep.error.empty()) {
    return {false, sweep.error};
  }
  const SweepGrid& grid = sweep.grid;
  const double pool = default_spec().base_market.total_antennas;
  const bool big_enough = grid.rows() >= 10 && grid.cols() >= 10;

  std::size_t winners_vs_rate = 0;
  for (std::size_t c = 0; c < grid.cols(); ++c) {
    for (std::size_t r = 1; r < grid.rows(); ++r) {
      if (grid.at(r, c).outcome.num_winners > grid.at(r - 1, c).outcome.num_winners) {
        ++winners_vs_rate;
      }
    }
  }
  std::size_t winners_vs_alpha = 0;
  std::size_t antenna_revenue = 0;
  std::size_t antennas = 0;
  std::size_t bandwidth = 0;
  std::size_t price = 0;
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    winners_vs_alpha += row_violations(grid, r, [](const auto& a, const auto& b) {
      return b.num_winners > a.num_winners;
    });
    antenna_revenue += row_violations(grid, r, [](const auto& a, const auto& b) {
      return b.antenna_revenue < a.antenna_revenue;
    });
    price += row_violations(grid, r, [](const auto& a, const auto& b) {
      return b.clearing_spectrum_price > a.clearing_spectrum_price;
    });

    // Per-winner shape: a full-pool plateau, then fewer antennas and more
    // bandwidth. Only cells that have winners carry a per-winner value.
    std::vector<const AuctionOutcome*> served;
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      if (grid.at(r, c).outcome.num_winners > 0) {
        served.push_back(&grid.at(r, c).outcome);
      }
    }
    if (!served.empty() && served.front()->mean_antennas != pool) {
      ++antennas;
    }
    for (std::size_t i = 1; i < served.size(); ++i) {
      const auto& a = *served[i - 1];
      const auto& b = *served[i];
      antennas += b.mean_antennas > a.mean_antennas;
      const bool on_plateau = b.mean_antennas == pool;
      bandwidth += on_plateau ? b.mean_bandwidth != a.mean_bandwidth
                              : b.mean_bandwidth < a.mean_bandwidth;
    }
  }
  const std::size_t total =
      winners_vs_rate + winners_vs_alpha + antenna_revenue + antennas + bandwidth + price;
  return {big_enough && total == 0,
          fmt::format("{}x{} grid, {:.2f} s; violations: winners-vs-rate {}, winners-vs-alpha {}, "
                      "antenna-revenue {}, antenna-plateau {}, bandwidth-flat-then-rise {}, "
                      "spectrum-price {}",
                      grid.rows(), grid.cols(), sweep.seconds, winners_vs_rate, winners_vs_alpha,
                      antenna_revenue, antennas, bandwidth, price)};
}

Verdict winner_regions() {
  const auto& sweep = checked_sweep();
  if (!sweep.error.empty()) {
    return {false, sweep.error};
  }
  std::size_t dropping = 0;
  for (std::size_t r = 0; r < sweep.grid.rows(); ++r) {
    dropping += winner_drops(sweep.grid, r);
  }
  return {dropping == sweep.grid.rows(),
          fmt::format("{} of {} rate rows show a winner-count drop", dropping, sweep.grid.rows())};
}

Verdict opposing_trends() {
  const auto& sweep = checked_sweep();
  if (!sweep.error.empty()) {
    return {false, sweep.error};
  }
  const SweepGrid& grid = sweep.grid;
  const MarketConfig& market = default_spec().base_market;
  // One clock tick on the whole band: the granularity at which the clearing
  // price, and hence combined revenue, is resolved.
  const double tick = market.price_increment * static_cast<double>(market.total_spectrum);

  std::size_t rows = 0;
  std::size_t combined = 0;
  std::size_t combined_strict = 0;
  std::size_t antenna = 0;
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    if (!winner_drops(grid, r)) {
      continue;
    }
    ++rows;
    combined += row_violations(grid, r, [tick](const auto& a, const auto& b) {
      return b.combined_revenue > a.combined_revenue + tick;
    });
    combined_strict += row_violations(grid, r, [](const auto& a, const auto& b) {
      return b.combined_revenue > a.combined_revenue;
    });
    antenna += row_violations(grid, r, [](const auto& a, const auto& b) {
      return b.antenna_revenue < a.antenna_revenue;
    });
  }
  return {rows > 0 && combined == 0 && antenna == 0,
          fmt::format("{} dropping rows; combined-revenue rises beyond one tick ({}) {} "
                      "(strict rises {}), antenna-revenue falls {}",
                      rows, tick, combined, combined_strict, antenna)};
}

Verdict determinism() {
  const auto& sweep = checked_sweep();
  if (!sweep.error.empty()) {
    return {false, sweep.error};
  }
  const std::string first = long_form(sweep.grid);
  const std::string second = long_form(run_sweep(default_spec()));
  return {first == second,
          fmt::format("{} bytes of long-form CSV, {}", first.size(),
                      first == second ? "identical" : "different")};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {1, "substitution ratio", substitution_ratio},
      {2, "bidder optimizer vs exhaustive scan", bidder_oracle},
      {3, "winner determination vs brute force", wdp_oracle},
      {4, "clock termination and monotonicity", clock_invariants},
      {5, "figure-trend suite", trend_suite},
      {6, "winner-count region structure", winner_regions},
      {7, "opposing revenue trends", opposing_trends},
      {8, "determinism", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, fmt::format("exception: {}", e.what())};
    }
    failures += !v.pass;
    fmt::print("{} [{}] {}: {}\n", v.pass ? "PASS" : "FAIL", c.number, c.name, v.detail);
  }
  fmt::print("{} of {} criteria passed\n", std::size(criteria) - failures, std::size(criteria));
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
