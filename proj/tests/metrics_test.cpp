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
#include <sstream>

#include <gtest/gtest.h>

#include "cranauction/errors.hpp"

namespace cranauction {
namespace {

// Builds a one-round clock history holding the given bids.
ClockResult single_round(std::vector<PackageBid> bids, Currency p_s, Currency p_a) {
  ClockResult clock;
  RoundRecord round;
  round.p_spectrum = p_s;
  round.p_antenna = p_a;
  round.bids = std::move(bids);
  for (const auto& b : round.bids) {
    round.aggregate_spectrum_demand += b.package.bandwidth;
  }
  clock.rounds.push_back(round);
  return clock;
}

TEST(Summarize, NoWinners) {
  const MarketConfig market;
  const ClockResult clock = single_round({}, 0.5, 3.0);
  const AuctionOutcome out = summarize(clock, Allocation{}, market);
  EXPECT_EQ(out.num_winners, 0);
  EXPECT_EQ(out.combined_revenue, 0.0);
  EXPECT_EQ(out.antenna_revenue, 0.0);
  EXPECT_EQ(out.spectrum_revenue, 0.0);
  EXPECT_EQ(out.mean_antennas, 0.0);
  EXPECT_EQ(out.mean_bandwidth, 0.0);
}

TEST(Summarize, HomogeneousWinners) {
  const MarketConfig market;
  const Currency p_s = 1.25;
  const Currency p_a = 40.0;
  std::vector<PackageBid> bids;
  for (std::uint32_t i = 0; i < 5; ++i) {
    bids.push_back(
        PackageBid{BidderId{i}, Package{12, 6'000, package_cost(p_s, p_a, 6'000, 12)}, 0});
  }
  const ClockResult clock = single_round(bids, p_s, p_a);
  const WdpInstance inst{bids, market.total_spectrum, p_s, p_a};
  const Allocation alloc = make_allocation(inst, {0, 1, 2, 3, 4});
  const AuctionOutcome out = summarize(clock, alloc, market);

  EXPECT_EQ(out.num_winners, 5);
  EXPECT_DOUBLE_EQ(out.combined_revenue, 5 * (p_s * 6'000 + p_a * 12));
  EXPECT_EQ(out.mean_antennas, 12.0);
  EXPECT_EQ(out.mean_bandwidth, 6'000.0);
  EXPECT_EQ(out.combined_revenue, out.antenna_revenue + out.spectrum_revenue);
  EXPECT_EQ(out.combined_revenue, alloc.revenue);
  EXPECT_EQ(out.clearing_spectrum_price, p_s);
}

TEST(Summarize, RejectsWinnerMissingFromSourceRound) {
  const MarketConfig market;
  const PackageBid stray{BidderId{9}, Package{1, 100, 1.0}, 0};
  const ClockResult clock = single_round({}, 0.01, 0.0);
  Allocation alloc;
  alloc.winning_bids.push_back(stray);
  EXPECT_THROW(summarize(clock, alloc, market), ConsistencyError);
}

TEST(Summarize, UsesLastExcessRoundOnOversupply) {
  MarketConfig market;
  market.total_spectrum = 10'000;
  const PackageBid a{BidderId{0}, Package{4, 6'000, 0.0}, 0};
  const PackageBid b{BidderId{1}, Package{4, 6'000, 0.0}, 0};
  ClockResult clock = single_round({a, b}, 0.5, 2.0);
  clock.rounds[0].excess_demand = true;
  RoundRecord empty;
  empty.round_index = 1;
  empty.p_spectrum = 0.6;
  empty.p_antenna = 2.0;
  clock.rounds.push_back(empty);
  clock.last_excess_index = 0;
  clock.oversupply = true;

  const WdpInstance inst{clock.rounds[0].bids, market.total_spectrum, 0.5, 2.0};
  const Allocation alloc = solve_wdp(inst);
  const AuctionOutcome out = summarize(clock, alloc, market);
  EXPECT_EQ(out.clearing_spectrum_price, 0.5);
  EXPECT_EQ(out.num_winners, 1);
  EXPECT_EQ(out.combined_revenue, alloc.revenue);
}

TEST(OutcomeRow, ColumnCountMatchesHeader) {
  AuctionOutcome out;
  out.num_winners = 3;
  std::ostringstream os;
  write_outcome_row(os, out);
  const auto commas = [](std::string_view s) { return std::count(s.begin(), s.end(), ','); };
  EXPECT_EQ(commas(os.str()), commas(kOutcomeCsvHeader));
}

}  // namespace
}  // namespace cranauction
