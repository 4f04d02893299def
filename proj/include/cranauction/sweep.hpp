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

#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <vector>

#include "cranauction/clock_engine.hpp"
#include "cranauction/metrics.hpp"
#include "cranauction/winner_determination.hpp"

namespace cranauction {

/// Clock phase followed, when the clock overshoots into oversupply, by
/// winner determination over the last excess-demand round.
struct AuctionRun {
  ClockResult clock;
  AuctionOutcome outcome;
};

AuctionRun run_auction(const MarketConfig& market, std::span<const BidderProfile> bidders,
                       Currency p_antenna, const WdpOptions& wdp = {});

/// Two-parameter experiment grid: minimum rate (rows) by antenna cost
/// (columns). An antenna cost `alpha` posts p_antenna = alpha * value_per_kbps.
struct SweepSpec {
  std::vector<Kbps> rate_axis;
  std::vector<double> antenna_cost_axis;
  MarketConfig base_market;
  // Template for every bidder; r_min is replaced by the row's rate.
  BidderProfile base_bidder;
  // Each bidder's value_per_kbps is scaled by a factor drawn uniformly from
  // [1 - value_spread, 1 + value_spread]. Zero keeps the roster homogeneous.
  double value_spread = 0.0;

  void validate() const;
};

struct CellResult {
  Kbps r_min = 0.0;
  double alpha = 0.0;
  AuctionOutcome outcome;
};

/// Row-major grid of cells, rows following rate_axis.
struct SweepGrid {
  std::vector<Kbps> rate_axis;
  std::vector<double> antenna_cost_axis;
  std::vector<CellResult> cells;

  std::size_t rows() const { return rate_axis.size(); }
  std::size_t cols() const { return antenna_cost_axis.size(); }
  const CellResult& at(std::size_t row, std::size_t col) const {
    return cells.at(row * cols() + col);
  }
};

struct SweepOptions {
  WdpOptions wdp;
  // Re-verify the clock invariants of every cell and fail the sweep on the
  // first violation.
  bool check_clock_invariants = false;
  // Worker threads; cells are independent and results do not depend on it.
  unsigned jobs = 1;
};

/// Roster for one cell. Deterministic in (rng_seed, row, col).
std::vector<BidderProfile> make_roster(const SweepSpec& spec, Kbps r_min,
                                       std::size_t row, std::size_t col);

/// Runs one auction per cell. A failing cell aborts the sweep with an error
/// naming the cell coordinates.
SweepGrid run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

/// Header of the long-form CSV written by write_long_form().
std::string long_form_header();

/// One row per cell, row-major over the grid.
void write_long_form(std::ostream& os, const SweepGrid& grid);

/// Writes sweep.csv (long form) and the six per-figure matrices into
/// `out_dir`. Returns the paths written.
std::vector<std::filesystem::path> emit_matrices(const SweepGrid& grid,
                                                 const std::filesystem::path& out_dir);

}  // namespace cranauction
