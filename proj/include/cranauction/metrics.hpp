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
#include <ostream>
#include <string_view>

#include "cranauction/clock_engine.hpp"
#include "cranauction/winner_determination.hpp"

namespace cranauction {

struct AuctionOutcome {
  Allocation allocation;
  Currency clearing_spectrum_price = 0.0;
  Currency p_antenna = 0.0;
  Currency combined_revenue = 0.0;
  Currency antenna_revenue = 0.0;
  Currency spectrum_revenue = 0.0;
  std::int32_t num_winners = 0;
  // Both means are 0 when nobody wins.
  double mean_antennas = 0.0;
  double mean_bandwidth = 0.0;
  std::int64_t clock_rounds = 0;
};

/// Fills every outcome statistic for an allocation drawn from `clock`.
/// Throws ConsistencyError when a winning bid is not one of the bids of the
/// clock's allocation round.
AuctionOutcome summarize(const ClockResult& clock, const Allocation& allocation,
                         const MarketConfig& market);

/// Column order of write_outcome_row(); stable across versions.
inline constexpr std::string_view kOutcomeCsvHeader =
    "clearing_spectrum_price,p_antenna,num_winners,combined_revenue,"
    "antenna_revenue,spectrum_revenue,mean_antennas,mean_bandwidth,"
    "spectrum_used,optimal,clock_rounds";

void write_outcome_row(std::ostream& os, const AuctionOutcome& outcome);

}  // namespace cranauction
