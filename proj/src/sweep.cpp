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

#include "cranauction/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cranauction/errors.hpp"

namespace cranauction {

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) {
    throw ConfigError(std::string(name) + " must not be empty");
  }
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (!(axis[i] >= 0.0) || !std::isfinite(axis[i])) {
      throw ConfigError(std::string(name) + " values must be finite and >= 0");
    }
    if (i > 0 && !(axis[i] > axis[i - 1])) {
      throw ConfigError(std::string(name) + " must be strictly increasing");
    }
  }
}

struct MatrixSpec {
  const char* file;
  std::function<std::string(const AuctionOutcome&)> value;
};

const std::vector<MatrixSpec>& matrix_specs() {
  static const std::vector<MatrixSpec> specs = {
      {"combined_revenue.csv",
       [](const AuctionOutcome& o) { return fmt::format("{}", o.combined_revenue); }},
      {"num_winners.csv",
       [](const AuctionOutcome& o) { return fmt::format("{}", o.num_winners); }},
      {"antenna_revenue.csv",
       [](const AuctionOutcome& o) { return fmt::format("{}", o.antenna_revenue); }},
      {"mean_antennas.csv",
       [](const AuctionOutcome& o) { return fmt::format("{}", o.mean_antennas); }},
      {"mean_bandwidth.csv",
       [](const AuctionOutcome& o) { return fmt::format("{}", o.mean_bandwidth); }},
      {"spectrum_price.csv",
       [](const AuctionOutcome& o) { return fmt::format("{}", o.clearing_spectrum_price); }},
  };
  return specs;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

}  // namespace

AuctionRun run_auction(const MarketConfig& market, std::span<const BidderProfile> bidders,
                       Currency p_antenna, const WdpOptions& wdp) {
  AuctionRun run;
  run.clock = run_clock_phase(market, bidders, p_antenna);
  const RoundRecord& source = run.clock.allocation_round();
  WdpInstance instance{source.bids, market.total_spectrum, source.p_spectrum,
                       source.p_antenna};
  Allocation allocation;
  if (run.clock.oversupply) {
    allocation = solve_wdp(instance, wdp);
  } else {
    // No overshoot: every standing bid fits, so every bid wins.
    std::vector<std::size_t> all(instance.bids.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      all[i] = i;
    }
    allocation = make_allocation(instance, all);
  }
  run.outcome = summarize(run.clock, allocation, market);
  return run;
}

void SweepSpec::validate() const {
  check_axis(rate_axis, "rate_axis");
  check_axis(antenna_cost_axis, "antenna_cost_axis");
  if (rate_axis.front() <= 0.0) {
    throw ConfigError("rate_axis values must be > 0");
  }
  base_market.validate();
  if (base_market.num_bidders < 1) {
    throw ConfigError("num_bidders must be >= 1 for a sweep");
  }
  if (!(value_spread >= 0.0 && value_spread < 1.0)) {
    throw ConfigError("value_spread must lie in [0, 1)");
  }
  BidderProfile probe = base_bidder;
  probe.r_min = rate_axis.front();
  probe.validate(base_market);
}

std::vector<BidderProfile> make_roster(const SweepSpec& spec, Kbps r_min,
                                       std::size_t row, std::size_t col) {
  std::vector<BidderProfile> roster;
  roster.reserve(static_cast<std::size_t>(spec.base_market.num_bidders));
  std::seed_seq seq{static_cast<std::uint64_t>(spec.base_market.rng_seed),
                    static_cast<std::uint64_t>(row), static_cast<std::uint64_t>(col)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> spread(-1.0, 1.0);
  for (std::int32_t i = 0; i < spec.base_market.num_bidders; ++i) {
    BidderProfile b = spec.base_bidder;
    b.id = BidderId{static_cast<std::uint32_t>(i)};
    b.r_min = r_min;
    if (spec.value_spread > 0.0) {
      b.value_per_kbps *= 1.0 + spec.value_spread * spread(rng);
    }
    roster.push_back(b);
  }
  return roster;
}

SweepGrid run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  spec.validate();
  SweepGrid grid;
  grid.rate_axis = spec.rate_axis;
  grid.antenna_cost_axis = spec.antenna_cost_axis;
  const std::size_t rows = grid.rows();
  const std::size_t cols = grid.cols();
  grid.cells.resize(rows * cols);
  std::vector<std::exception_ptr> errors(rows * cols);

  auto run_cell = [&](std::size_t index) {
    const std::size_t row = index / cols;
    const std::size_t col = index % cols;
    const Kbps r_min = spec.rate_axis[row];
    const double alpha = spec.antenna_cost_axis[col];
    try {
      const auto roster = make_roster(spec, r_min, row, col);
      const Currency p_antenna = alpha * spec.base_bidder.value_per_kbps;
      AuctionRun run = run_auction(spec.base_market, roster, p_antenna, options.wdp);
      if (options.check_clock_invariants) {
        const auto violations = check_clock_invariants(run.clock, spec.base_market);
        if (!violations.empty()) {
          throw ConsistencyError("clock invariant violated: " + violations.front());
        }
      }
      grid.cells[index] = CellResult{r_min, alpha, std::move(run.outcome)};
    } catch (const std::exception& e) {
      errors[index] = std::make_exception_ptr(std::runtime_error(
          fmt::format("sweep cell (row {}, col {}; r_min={}, alpha={}): {}", row, col,
                      r_min, alpha, e.what())));
    }
  };

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, rows * cols));
  if (jobs == 1) {
    for (std::size_t i = 0; i < rows * cols; ++i) {
      run_cell(i);
      if (errors[i]) {
        std::rethrow_exception(errors[i]);
      }
    }
    return grid;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < rows * cols && !failed; i = next++) {
          run_cell(i);
          if (errors[i]) {
            failed = true;
          }
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
  return grid;
}

std::string long_form_header() {
  return "r_min,alpha," + std::string(kOutcomeCsvHeader);
}

void write_long_form(std::ostream& os, const SweepGrid& grid) {
  os << long_form_header() << '\n';
  for (const auto& cell : grid.cells) {
    fmt::print(os, "{},{},", cell.r_min, cell.alpha);
    write_outcome_row(os, cell.outcome);
    os << '\n';
  }
}

std::vector<std::filesystem::path> emit_matrices(const SweepGrid& grid,
                                                 const std::filesystem::path& out_dir) {
  if (grid.cells.size() != grid.rows() * grid.cols()) {
    throw std::invalid_argument("sweep grid is incomplete");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
  }

  std::vector<std::filesystem::path> written;
  const auto long_path = out_dir / "sweep.csv";
  {
    auto out = open_for_write(long_path);
    write_long_form(out, grid);
    finish_write(out, long_path);
  }
  written.push_back(long_path);

  for (const auto& spec : matrix_specs()) {
    const auto path = out_dir / spec.file;
    auto out = open_for_write(path);
    out << "r_min\\alpha";
    for (const double alpha : grid.antenna_cost_axis) {
      fmt::print(out, ",{}", alpha);
    }
    out << '\n';
    for (std::size_t r = 0; r < grid.rows(); ++r) {
      fmt::print(out, "{}", grid.rate_axis[r]);
      for (std::size_t c = 0; c < grid.cols(); ++c) {
        out << ',' << spec.value(grid.at(r, c).outcome);
      }
      out << '\n';
    }
    finish_write(out, path);
    written.push_back(path);
  }
  return written;
}

}  // namespace cranauction
