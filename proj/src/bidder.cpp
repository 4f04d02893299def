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

#include "cranauction/bidder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cranauction/errors.hpp"

namespace cranauction {

void BidderProfile::validate(const MarketConfig& market) const {
  const std::string who = "bidder " + std::to_string(id.value) + ": ";
  if (!(r_min > 0.0) || !std::isfinite(r_min)) {
    throw ConfigError(who + "r_min must be a finite positive rate");
  }
  if (!(value_per_kbps >= 0.0) || !std::isfinite(value_per_kbps)) {
    throw ConfigError(who + "value_per_kbps must be >= 0");
  }
  if (min_antennas < 1 || min_antennas > market.total_antennas) {
    throw ConfigError(who + "min_antennas must lie in [1, total_antennas]");
  }
  if (min_bandwidth < 0) {
    throw ConfigError(who + "min_bandwidth must be >= 0");
  }
}

PackageOptimizer::PackageOptimizer(const BidderProfile& profile,
                                   const MarketConfig& market)
    : min_antennas_(profile.min_antennas) {
  profile.validate(market);
  const RateModel model(market.snr_linear);
  const Kilohertz floor =
      round_up_to_unit(static_cast<double>(profile.min_bandwidth), market.spectrum_unit);
  bandwidth_.reserve(static_cast<std::size_t>(market.total_antennas - min_antennas_ + 1));
  for (AntennaCount m = min_antennas_; m <= market.total_antennas; ++m) {
    bandwidth_.push_back(std::max(
        model.required_bandwidth(profile.r_min, m, market.spectrum_unit), floor));
  }
}

Package PackageOptimizer::solve(Currency p_spectrum, Currency p_antenna) const {
  if (p_spectrum < 0.0 || p_antenna < 0.0) {
    throw std::invalid_argument("posted prices must be non-negative");
  }
  Package best;
  for (std::size_t i = 0; i < bandwidth_.size(); ++i) {
    const auto m = min_antennas_ + static_cast<AntennaCount>(i);
    const Currency cost = package_cost(p_spectrum, p_antenna, bandwidth_[i], m);
    if (i == 0 || cost < best.cost) {
      best = Package{m, bandwidth_[i], cost};
    }
  }
  return best;
}

Package optimal_package(const BidderProfile& profile, Currency p_spectrum,
                        Currency p_antenna, const MarketConfig& market) {
  return PackageOptimizer(profile, market).solve(p_spectrum, p_antenna);
}

std::optional<PackageBid> decide_bid(const BidderProfile& profile,
                                     const Package& pkg,
                                     std::int64_t round_index) {
  if (pkg.cost <= profile.budget()) {
    return PackageBid{profile.id, pkg, round_index};
  }
  return std::nullopt;
}

}  // namespace cranauction
