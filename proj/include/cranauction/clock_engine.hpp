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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cranauction/bidder.hpp"
#include "cranauction/market_model.hpp"

namespace cranauction {

/// One round of the clock phase.
struct RoundRecord {
  std::int64_t round_index = 0;
  Currency p_spectrum = 0.0;
  Currency p_antenna = 0.0;
  // Optimal package of every bidder in roster order, whether or not it bid.
  std::vector<Package> packages;
  std::vector<PackageBid> bids;
  Kilohertz aggregate_spectrum_demand = 0;
  bool excess_demand = false;
};

/// Full history of a clock phase. The last round is the terminal one and
/// never has excess demand.
struct ClockResult {
  std::vector<RoundRecord> rounds;
  std::optional<std::size_t> last_excess_index;
  bool oversupply = false;

  const RoundRecord& terminal_round() const { return rounds.back(); }
  const RoundRecord* last_excess_round() const {
    return last_excess_index ? &rounds[*last_excess_index] : nullptr;
  }
  /// The round whose bids are allocated: the last excess-demand round when
  /// the clock overshot into oversupply, the terminal round otherwise.
  const RoundRecord& allocation_round() const {
    return oversupply ? rounds[*last_excess_index] : terminal_round();
  }
};

/// True iff the summed bandwidth of `bids` exceeds the spectrum on offer.
/// Antennas are shared and never gate excess demand.
bool detect_excess(std::span<const PackageBid> bids, const MarketConfig& market);

/// Runs the ascending clock: starting at the reserve price, every bidder is
/// asked for its cost-minimizing package each round and bids if it can
/// afford it; while bids request more spectrum than exists the spectrum
/// price is raised by `price_increment`. The antenna price stays fixed.
ClockResult run_clock_phase(const MarketConfig& market,
                            std::span<const BidderProfile> bidders,
                            Currency p_antenna);

/// Re-checks the clock invariants on a finished history: exact price steps,
/// demand bookkeeping, a clean terminal round, the oversupply flag, and
/// per-bidder monotone demand (bandwidth never rises, antennas never fall).
/// Returns one message per violation; empty means the history is sound.
std::vector<std::string> check_clock_invariants(const ClockResult& clock,
                                                const MarketConfig& market);

}  // namespace cranauction
