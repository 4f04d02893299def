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
#include <random>
#include <string>
#include <vector>

#include "cranauction/bidder.hpp"
#include "cranauction/winner_determination.hpp"

namespace cranauction::oracles {

/// Reference package optimizer: finds each antenna count's bandwidth by
/// bisection over whole spectrum units (no closed-form inverse), prices every
/// antenna count, and takes the first minimum.
Package exhaustive_package(const BidderProfile& profile, Currency p_spectrum,
                           Currency p_antenna, const MarketConfig& market);

struct BidderCase {
  MarketConfig market;
  BidderProfile profile;
  Currency p_spectrum = 0.0;
  Currency p_antenna = 0.0;
};

/// Random market/bidder/price draw covering floors, zero prices and small
/// antenna pools.
BidderCase random_bidder_case(std::mt19937_64& rng);

/// Random WDP instance with 0..max_bids bids. Roughly half the instances are
/// tie-dense (a few distinct packages repeated across bidders).
WdpInstance random_wdp_instance(std::mt19937_64& rng, std::size_t max_bids);

struct CheckReport {
  std::size_t bidder_cases = 0;
  std::size_t bidder_mismatches = 0;
  std::size_t wdp_cases = 0;
  std::size_t wdp_mismatches = 0;
  std::vector<std::string> failures;

  bool ok() const { return bidder_mismatches == 0 && wdp_mismatches == 0; }
};

/// Oracle-equivalence self test: optimal_package vs exhaustive_package and
/// solve_wdp vs brute_force_wdp on seeded random instances.
CheckReport run_oracle_checks(std::uint64_t seed, std::size_t bidder_cases,
                              std::size_t wdp_cases, std::size_t max_wdp_bids = 15);

}  // namespace cranauction::oracles
