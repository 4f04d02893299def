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

#include "cranauction/oracles.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace cranauction::oracles {

namespace {

// Smallest number of spectrum units whose rate reaches r_min.
Kilohertz bisect_bandwidth(Kbps r_min, double efficiency, Kilohertz unit) {
  auto meets = [&](Kilohertz units) {
    return static_cast<double>(units * unit) * efficiency >= r_min;
  };
  Kilohertz hi = 1;
  while (!meets(hi)) {
    hi *= 2;
  }
  Kilohertz lo = 0;
  while (hi - lo > 1) {
    const Kilohertz mid = lo + (hi - lo) / 2;
    if (meets(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi * unit;
}

}  // namespace

Package exhaustive_package(const BidderProfile& profile, Currency p_spectrum,
                           Currency p_antenna, const MarketConfig& market) {
  const Kilohertz unit = market.spectrum_unit;
  const Kilohertz floor = (profile.min_bandwidth + unit - 1) / unit * unit;
  std::vector<Package> all;
  for (AntennaCount m = profile.min_antennas; m <= market.total_antennas; ++m) {
    const double efficiency = std::log2(1.0 + market.snr_linear * static_cast<double>(m));
    const Kilohertz bw = std::max(bisect_bandwidth(profile.r_min, efficiency, unit), floor);
    all.push_back(Package{m, bw, package_cost(p_spectrum, p_antenna, bw, m)});
  }
  return *std::min_element(all.begin(), all.end(), [](const Package& a, const Package& b) {
    return a.cost < b.cost;
  });
}

BidderCase random_bidder_case(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit01(0.0, 1.0);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  BidderCase c;
  c.market.total_antennas = pick(1, 128);
  static constexpr Kilohertz kUnits[] = {1, 5, 10, 100};
  c.market.spectrum_unit = kUnits[pick(0, 3)];
  c.market.total_spectrum = c.market.spectrum_unit * pick(1, 100'000);
  c.market.snr_linear = std::pow(10.0, unit01(rng) * 3.0 - 0.5);

  c.profile.id = BidderId{static_cast<std::uint32_t>(pick(0, 1000))};
  c.profile.r_min = std::pow(10.0, 1.0 + unit01(rng) * 5.0);
  c.profile.value_per_kbps = unit01(rng) * 2.0;
  c.profile.min_antennas = unit01(rng) < 0.5 ? 1 : pick(1, c.market.total_antennas);
  c.profile.min_bandwidth =
      unit01(rng) < 0.5 ? 0 : static_cast<Kilohertz>(unit01(rng) * c.profile.r_min / 2.0);

  const double mode = unit01(rng);
  c.p_spectrum = mode < 0.1 ? 0.0 : std::pow(10.0, unit01(rng) * 4.0 - 3.0);
  c.p_antenna = mode > 0.9 ? 0.0 : std::pow(10.0, unit01(rng) * 6.0 - 2.0);
  return c;
}

WdpInstance random_wdp_instance(std::mt19937_64& rng, std::size_t max_bids) {
  std::uniform_real_distribution<double> unit01(0.0, 1.0);
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };

  WdpInstance inst;
  inst.total_spectrum = pick(1'000, 50'000);
  inst.p_spectrum = unit01(rng) < 0.1 ? 0.0 : unit01(rng) * 10.0;
  inst.p_antenna = unit01(rng) < 0.2 ? 0.0 : unit01(rng) * 50.0;
  const auto n = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(max_bids)));
  const bool tie_dense = unit01(rng) < 0.5;
  std::vector<Package> menu;
  const auto menu_size = static_cast<std::size_t>(pick(1, 3));
  for (std::size_t k = 0; k < menu_size; ++k) {
    menu.push_back(Package{static_cast<AntennaCount>(pick(1, 64)),
                           pick(1, inst.total_spectrum * 3 / 4), 0.0});
  }
  for (std::size_t i = 0; i < n; ++i) {
    Package pkg;
    if (tie_dense) {
      pkg = menu[static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(menu_size) - 1))];
    } else {
      pkg.antennas = static_cast<AntennaCount>(pick(1, 64));
      pkg.bandwidth = pick(0, inst.total_spectrum * 6 / 5);
    }
    pkg.cost = package_cost(inst.p_spectrum, inst.p_antenna, pkg.bandwidth, pkg.antennas);
    inst.bids.push_back(PackageBid{BidderId{static_cast<std::uint32_t>(i)}, pkg, 0});
  }
  // Shuffle so bidder ids are not aligned with input order.
  std::shuffle(inst.bids.begin(), inst.bids.end(), rng);
  return inst;
}

CheckReport run_oracle_checks(std::uint64_t seed, std::size_t bidder_cases,
                              std::size_t wdp_cases, std::size_t max_wdp_bids) {
  CheckReport report;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < bidder_cases; ++i) {
    const BidderCase c = random_bidder_case(rng);
    const Package fast = optimal_package(c.profile, c.p_spectrum, c.p_antenna, c.market);
    const Package slow = exhaustive_package(c.profile, c.p_spectrum, c.p_antenna, c.market);
    ++report.bidder_cases;
    if (!(fast == slow)) {
      ++report.bidder_mismatches;
      report.failures.push_back(fmt::format(
          "bidder case {}: optimizer (m={}, B={}, cost={}) vs oracle (m={}, B={}, cost={})", i,
          fast.antennas, fast.bandwidth, fast.cost, slow.antennas, slow.bandwidth, slow.cost));
    }
  }
  for (std::size_t i = 0; i < wdp_cases; ++i) {
    const WdpInstance inst = random_wdp_instance(rng, max_wdp_bids);
    const Allocation fast = solve_wdp(inst);
    const Allocation slow = brute_force_wdp(inst);
    ++report.wdp_cases;
    if (fast.revenue != slow.revenue || fast.winning_bids != slow.winning_bids) {
      ++report.wdp_mismatches;
      report.failures.push_back(fmt::format(
          "wdp case {} ({} bids): search revenue {} / {} winners vs oracle {} / {} winners", i,
          inst.bids.size(), fast.revenue, fast.winning_bids.size(), slow.revenue,
          slow.winning_bids.size()));
    }
  }
  return report;
}

}  // namespace cranauction::oracles
