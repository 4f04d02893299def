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

#include "cranauction/clock_engine.hpp"

#include <stdexcept>
#include <string>

#include "cranauction/errors.hpp"

namespace cranauction {

namespace {

Kilohertz total_bandwidth(std::span<const PackageBid> bids) {
  Kilohertz sum = 0;
  for (const auto& bid : bids) {
    sum += bid.package.bandwidth;
  }
  return sum;
}

}  // namespace

bool detect_excess(std::span<const PackageBid> bids, const MarketConfig& market) {
  return total_bandwidth(bids) > market.total_spectrum;
}

ClockResult run_clock_phase(const MarketConfig& market,
                            std::span<const BidderProfile> bidders,
                            Currency p_antenna) {
  market.validate();
  if (bidders.empty()) {
    throw std::invalid_argument("bidder roster must not be empty");
  }
  if (!(p_antenna >= 0.0)) {
    throw std::invalid_argument("antenna price must be non-negative");
  }

  std::vector<PackageOptimizer> optimizers;
  optimizers.reserve(bidders.size());
  for (const auto& profile : bidders) {
    optimizers.emplace_back(profile, market);
  }

  ClockResult result;
  Currency price = market.reserve_spectrum_price;
  for (std::int64_t round = 0;; ++round) {
    if (round >= market.max_rounds) {
      throw ConfigError("clock phase exceeded max_rounds=" +
                        std::to_string(market.max_rounds));
    }
    RoundRecord record;
    record.round_index = round;
    record.p_spectrum = price;
    record.p_antenna = p_antenna;
    record.packages.reserve(bidders.size());
    for (std::size_t i = 0; i < bidders.size(); ++i) {
      const Package pkg = optimizers[i].solve(price, p_antenna);
      record.packages.push_back(pkg);
      if (auto bid = decide_bid(bidders[i], pkg, round)) {
        record.bids.push_back(*bid);
      }
    }
    record.aggregate_spectrum_demand = total_bandwidth(record.bids);
    record.excess_demand = detect_excess(record.bids, market);
    const bool excess = record.excess_demand;
    result.rounds.push_back(std::move(record));
    if (!excess) {
      break;
    }
    result.last_excess_index = result.rounds.size() - 1;
    price += market.price_increment;
  }

  result.oversupply = result.last_excess_index.has_value() &&
                      result.terminal_round().aggregate_spectrum_demand <
                          market.total_spectrum;
  return result;
}

std::vector<std::string> check_clock_invariants(const ClockResult& clock,
                                                const MarketConfig& market) {
  std::vector<std::string> violations;
  auto fail = [&](std::int64_t round, const std::string& what) {
    violations.push_back("round " + std::to_string(round) + ": " + what);
  };

  if (clock.rounds.empty()) {
    violations.emplace_back("clock history is empty");
    return violations;
  }
  std::optional<std::size_t> last_excess;
  for (std::size_t r = 0; r < clock.rounds.size(); ++r) {
    const auto& round = clock.rounds[r];
    if (round.aggregate_spectrum_demand != total_bandwidth(round.bids)) {
      fail(round.round_index, "aggregate demand does not match bids");
    }
    if (round.excess_demand !=
        (round.aggregate_spectrum_demand > market.total_spectrum)) {
      fail(round.round_index, "excess flag disagrees with aggregate demand");
    }
    if (round.excess_demand) {
      last_excess = r;
    }
    if (r == 0) {
      continue;
    }
    const auto& prev = clock.rounds[r - 1];
    if (round.p_spectrum != prev.p_spectrum + market.price_increment) {
      fail(round.round_index, "price did not step by exactly price_increment");
    }
    if (round.p_antenna != prev.p_antenna) {
      fail(round.round_index, "antenna price changed during the clock");
    }
    if (round.packages.size() != prev.packages.size()) {
      fail(round.round_index, "roster size changed");
      continue;
    }
    for (std::size_t i = 0; i < round.packages.size(); ++i) {
      if (round.packages[i].bandwidth > prev.packages[i].bandwidth) {
        fail(round.round_index,
             "bidder #" + std::to_string(i) + " raised its bandwidth demand");
      }
      if (round.packages[i].antennas < prev.packages[i].antennas) {
        fail(round.round_index,
             "bidder #" + std::to_string(i) + " lowered its antenna demand");
      }
    }
  }
  const auto& terminal = clock.terminal_round();
  if (terminal.excess_demand) {
    fail(terminal.round_index, "terminal round still has excess demand");
  }
  if (last_excess != clock.last_excess_index) {
    violations.emplace_back("last_excess_index does not point at the last excess round");
  }
  const bool oversupply = last_excess.has_value() &&
                          terminal.aggregate_spectrum_demand < market.total_spectrum;
  if (oversupply != clock.oversupply) {
    violations.emplace_back("oversupply flag is inconsistent");
  }
  return violations;
}

}  // namespace cranauction
