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

#include "cranauction/metrics.hpp"

#include <algorithm>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cranauction/errors.hpp"

namespace cranauction {

AuctionOutcome summarize(const ClockResult& clock, const Allocation& allocation,
                         const MarketConfig& market) {
  if (clock.rounds.empty()) {
    throw ConsistencyError("cannot summarize an empty clock history");
  }
  const RoundRecord& source = clock.allocation_round();
  for (const auto& bid : allocation.winning_bids) {
    const bool found =
        std::find(source.bids.begin(), source.bids.end(), bid) != source.bids.end();
    if (!found) {
      throw ConsistencyError("winning bid of bidder " + std::to_string(bid.bidder_id.value) +
                             " is not among the bids of round " +
                             std::to_string(source.round_index));
    }
  }

  AuctionOutcome out;
  out.allocation = allocation;
  out.clearing_spectrum_price = source.p_spectrum;
  out.p_antenna = source.p_antenna;
  out.num_winners = static_cast<std::int32_t>(allocation.winning_bids.size());
  out.clock_rounds = static_cast<std::int64_t>(clock.rounds.size());

  Kilohertz bandwidth = 0;
  std::int64_t antennas = 0;
  for (const auto& bid : allocation.winning_bids) {
    bandwidth += bid.package.bandwidth;
    antennas += bid.package.antennas;
  }
  if (bandwidth > market.total_spectrum) {
    throw ConsistencyError("allocation uses more spectrum than is on offer");
  }
  out.spectrum_revenue = out.clearing_spectrum_price * static_cast<double>(bandwidth);
  out.antenna_revenue = out.p_antenna * static_cast<double>(antennas);
  out.combined_revenue = out.spectrum_revenue + out.antenna_revenue;
  if (out.num_winners > 0) {
    out.mean_antennas = static_cast<double>(antennas) / out.num_winners;
    out.mean_bandwidth = static_cast<double>(bandwidth) / out.num_winners;
  }
  return out;
}

void write_outcome_row(std::ostream& os, const AuctionOutcome& o) {
  fmt::print(os, "{},{},{},{},{},{},{},{},{},{},{}", o.clearing_spectrum_price,
             o.p_antenna, o.num_winners, o.combined_revenue, o.antenna_revenue,
             o.spectrum_revenue, o.mean_antennas, o.mean_bandwidth,
             o.allocation.spectrum_used, o.allocation.optimal ? 1 : 0, o.clock_rounds);
}

}  // namespace cranauction
