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
#include <vector>

#include "cranauction/market_model.hpp"
#include "cranauction/types.hpp"

namespace cranauction {

/// One virtual network operator.
///
/// The operator needs an aggregate rate of `r_min` Kbps and values each Kbps
/// at `value_per_kbps`, so its budget is `value_per_kbps * r_min`. Antennas
/// and spectrum only substitute for each other above the two floors.
struct BidderProfile {
  BidderId id;
  Kbps r_min = 0.0;
  Currency value_per_kbps = 0.0;
  AntennaCount min_antennas = 1;
  Kilohertz min_bandwidth = 0;

  Currency budget() const { return value_per_kbps * r_min; }

  void validate(const MarketConfig& market) const;
};

/// A bundle of antennas and spectrum together with its cost at the prices
/// it was computed for.
struct Package {
  AntennaCount antennas = 0;
  Kilohertz bandwidth = 0;
  Currency cost = 0.0;

  friend bool operator==(const Package&, const Package&) = default;
};

struct PackageBid {
  BidderId bidder_id;
  Package package;
  std::int64_t round_index = 0;

  friend bool operator==(const PackageBid&, const PackageBid&) = default;
};

/// Cost of `antennas` antennas plus `bandwidth` kHz. Every module prices
/// packages through this one expression so that costs and revenues agree
/// bit for bit.
inline Currency package_cost(Currency p_spectrum, Currency p_antenna,
                             Kilohertz bandwidth, AntennaCount antennas) {
  return p_spectrum * static_cast<double>(bandwidth) +
         p_antenna * static_cast<double>(antennas);
}

/// Cost-minimizing package search for one bidder.
///
/// The bandwidth needed for each antenna count does not depend on prices, so
/// it is tabulated once; each price query is then a single linear pass over
/// the antenna counts. Ties go to the smaller antenna count.
class PackageOptimizer {
 public:
  PackageOptimizer(const BidderProfile& profile, const MarketConfig& market);

  Package solve(Currency p_spectrum, Currency p_antenna) const;

  AntennaCount min_antennas() const { return min_antennas_; }
  AntennaCount max_antennas() const {
    return min_antennas_ + static_cast<AntennaCount>(bandwidth_.size()) - 1;
  }
  /// bandwidth_curve()[i] is the bandwidth needed with min_antennas() + i antennas.
  std::span<const Kilohertz> bandwidth_curve() const { return bandwidth_; }

 private:
  AntennaCount min_antennas_;
  std::vector<Kilohertz> bandwidth_;
};

Package optimal_package(const BidderProfile& profile, Currency p_spectrum,
                        Currency p_antenna, const MarketConfig& market);

/// Returns a bid when the package fits the budget (boundary inclusive).
std::optional<PackageBid> decide_bid(const BidderProfile& profile,
                                     const Package& pkg,
                                     std::int64_t round_index = 0);

}  // namespace cranauction
