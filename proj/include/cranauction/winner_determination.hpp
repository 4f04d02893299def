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

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cranauction/bidder.hpp"

namespace cranauction {

/// Standing bids of one clock round together with that round's prices.
/// A bid wider than `total_spectrum` is allowed; it simply never wins.
struct WdpInstance {
  std::vector<PackageBid> bids;
  Kilohertz total_spectrum = 0;
  Currency p_spectrum = 0.0;
  Currency p_antenna = 0.0;
};

struct Allocation {
  // Winners in the order they appear in the instance.
  std::vector<PackageBid> winning_bids;
  Kilohertz spectrum_used = 0;
  Currency revenue = 0.0;
  bool optimal = true;
};

struct WdpOptions {
  // Wall-clock budget for the anytime search; unset means search to optimality.
  std::optional<std::chrono::milliseconds> time_budget;
  // Deterministic cutoff on explored nodes, mostly useful in tests.
  std::optional<std::uint64_t> node_limit;
};

struct WdpStats {
  std::uint64_t nodes = 0;
  // Revenue of every successive incumbent, starting with the empty allocation.
  std::vector<Currency> incumbent_revenues;
};

/// Revenue of a bundle of bids priced at the instance's posted prices.
///
/// Computed from the summed bandwidth and antenna counts, so the result is
/// independent of the order in which bids were combined.
Currency allocation_revenue(const WdpInstance& instance, Kilohertz bandwidth,
                            std::int64_t antennas);

/// Builds an Allocation from a set of bid indices into `instance.bids`.
Allocation make_allocation(const WdpInstance& instance,
                           const std::vector<std::size_t>& winners,
                           bool optimal = true);

/// Strict preference between two allocations of the same instance:
/// higher revenue, then more winners, then the lexicographically smallest
/// sorted list of bidder ids.
bool better_allocation(const Allocation& a, const Allocation& b);

/// Branch-on-bids winner determination.
///
/// Depth-first search over include/exclude decisions, one bid per level,
/// bids ordered by descending revenue per kHz. A node is pruned when an
/// admissible upper bound on its revenue falls below the incumbent. With a
/// time budget or node limit the search may stop early and return the best
/// feasible incumbent, flagged `optimal = false`.
Allocation solve_wdp(const WdpInstance& instance, const WdpOptions& options = {},
                     WdpStats* stats = nullptr);

/// Exhaustive enumeration of all 2^n bid subsets with the same
/// tie-breaking as solve_wdp. Throws InstanceTooLarge above kBruteForceMaxBids.
Allocation brute_force_wdp(const WdpInstance& instance);

inline constexpr std::size_t kBruteForceMaxBids = 20;

}  // namespace cranauction
