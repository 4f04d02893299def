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

#include "cranauction/winner_determination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cranauction/errors.hpp"

namespace cranauction {

namespace {

std::vector<BidderId> sorted_ids(const std::vector<PackageBid>& bids) {
  std::vector<BidderId> ids;
  ids.reserve(bids.size());
  for (const auto& bid : bids) {
    ids.push_back(bid.bidder_id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

Currency bid_revenue(const WdpInstance& instance, const PackageBid& bid) {
  return package_cost(instance.p_spectrum, instance.p_antenna, bid.package.bandwidth,
                      bid.package.antennas);
}

// Bounds are compared against incumbents with a little slack so that
// rounding in the running sums can never prune a tying allocation.
double prune_slack(Currency incumbent) {
  return 1e-9 * std::max(1.0, std::abs(incumbent));
}

class BranchOnBids {
 public:
  BranchOnBids(const WdpInstance& instance, const WdpOptions& options, WdpStats* stats)
      : instance_(instance), options_(options), stats_(stats) {
    for (std::size_t i = 0; i < instance.bids.size(); ++i) {
      if (instance.bids[i].package.bandwidth <= instance.total_spectrum) {
        order_.push_back(i);
      }
    }
    revenue_.resize(instance.bids.size());
    for (std::size_t i = 0; i < instance.bids.size(); ++i) {
      revenue_[i] = bid_revenue(instance, instance.bids[i]);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const auto& ba = instance.bids[a];
      const auto& bb = instance.bids[b];
      // Compare revenue_a / bw_a > revenue_b / bw_b without dividing by zero.
      const double lhs = revenue_[a] * static_cast<double>(bb.package.bandwidth);
      const double rhs = revenue_[b] * static_cast<double>(ba.package.bandwidth);
      if (ba.package.bandwidth == 0 || bb.package.bandwidth == 0) {
        if ((ba.package.bandwidth == 0) != (bb.package.bandwidth == 0)) {
          return ba.package.bandwidth == 0;
        }
      } else if (lhs != rhs) {
        return lhs > rhs;
      }
      return ba.bidder_id < bb.bidder_id;
    });
    chosen_.reserve(order_.size());
    incumbent_ = make_allocation(instance_, {});
    record_incumbent();
    if (options_.time_budget) {
      deadline_ = std::chrono::steady_clock::now() + *options_.time_budget;
    }
  }

  Allocation run() {
    search(0, instance_.total_spectrum, 0.0);
    incumbent_.optimal = !cut_off_;
    return incumbent_;
  }

 private:
  void search(std::size_t depth, Kilohertz remaining, Currency committed) {
    if (cut_off_ || out_of_budget()) {
      cut_off_ = true;
      return;
    }
    ++nodes_;
    if (stats_ != nullptr) {
      stats_->nodes = nodes_;
    }
    if (depth == order_.size()) {
      consider_leaf();
      return;
    }
    if (upper_bound(depth, remaining, committed) <
        incumbent_.revenue - prune_slack(incumbent_.revenue)) {
      return;
    }
    const std::size_t idx = order_[depth];
    const Kilohertz bw = instance_.bids[idx].package.bandwidth;
    if (bw <= remaining) {
      chosen_.push_back(idx);
      search(depth + 1, remaining - bw, committed + revenue_[idx]);
      chosen_.pop_back();
    }
    search(depth + 1, remaining, committed);
  }

  // min(sum of undecided bids that individually fit, fractional knapsack
  // fill of the remaining spectrum); both are admissible.
  Currency upper_bound(std::size_t depth, Kilohertz remaining, Currency committed) const {
    Currency fitting = 0.0;
    Currency fractional = 0.0;
    Kilohertz cap = remaining;
    bool fractional_done = false;
    for (std::size_t k = depth; k < order_.size(); ++k) {
      const std::size_t idx = order_[k];
      const Kilohertz bw = instance_.bids[idx].package.bandwidth;
      if (bw <= remaining) {
        fitting += revenue_[idx];
      }
      if (!fractional_done) {
        if (bw <= cap) {
          fractional += revenue_[idx];
          cap -= bw;
        } else {
          fractional += revenue_[idx] * static_cast<double>(cap) / static_cast<double>(bw);
          fractional_done = true;
        }
      }
    }
    return committed + std::min(fitting, fractional);
  }

  void consider_leaf() {
    std::vector<std::size_t> winners = chosen_;
    std::sort(winners.begin(), winners.end());
    Allocation candidate = make_allocation(instance_, winners);
    if (better_allocation(candidate, incumbent_)) {
      incumbent_ = std::move(candidate);
      record_incumbent();
    }
  }

  bool out_of_budget() const {
    if (options_.node_limit && nodes_ >= *options_.node_limit) {
      return true;
    }
    if (deadline_ && (nodes_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() >= *deadline_) {
      return true;
    }
    return false;
  }

  void record_incumbent() {
    if (stats_ != nullptr) {
      stats_->incumbent_revenues.push_back(incumbent_.revenue);
    }
  }

  const WdpInstance& instance_;
  const WdpOptions& options_;
  WdpStats* stats_;
  std::vector<std::size_t> order_;
  std::vector<Currency> revenue_;
  std::vector<std::size_t> chosen_;
  Allocation incumbent_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool cut_off_ = false;
};

}  // namespace

Currency allocation_revenue(const WdpInstance& instance, Kilohertz bandwidth,
                            std::int64_t antennas) {
  return instance.p_spectrum * static_cast<double>(bandwidth) +
         instance.p_antenna * static_cast<double>(antennas);
}

Allocation make_allocation(const WdpInstance& instance,
                           const std::vector<std::size_t>& winners, bool optimal) {
  Allocation alloc;
  alloc.optimal = optimal;
  std::int64_t antennas = 0;
  for (const std::size_t i : winners) {
    const auto& bid = instance.bids.at(i);
    alloc.winning_bids.push_back(bid);
    alloc.spectrum_used += bid.package.bandwidth;
    antennas += bid.package.antennas;
  }
  alloc.revenue = allocation_revenue(instance, alloc.spectrum_used, antennas);
  return alloc;
}

bool better_allocation(const Allocation& a, const Allocation& b) {
  if (a.revenue != b.revenue) {
    return a.revenue > b.revenue;
  }
  if (a.winning_bids.size() != b.winning_bids.size()) {
    return a.winning_bids.size() > b.winning_bids.size();
  }
  return sorted_ids(a.winning_bids) < sorted_ids(b.winning_bids);
}

Allocation solve_wdp(const WdpInstance& instance, const WdpOptions& options,
                     WdpStats* stats) {
  if (stats != nullptr) {
    *stats = WdpStats{};
  }
  return BranchOnBids(instance, options, stats).run();
}

Allocation brute_force_wdp(const WdpInstance& instance) {
  const std::size_t n = instance.bids.size();
  if (n > kBruteForceMaxBids) {
    throw InstanceTooLarge("brute_force_wdp accepts at most " +
                           std::to_string(kBruteForceMaxBids) + " bids, got " +
                           std::to_string(n));
  }
  Allocation best = make_allocation(instance, {});
  std::vector<std::size_t> members;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Kilohertz bandwidth = 0;
    std::int64_t antennas = 0;
    members.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        members.push_back(i);
        bandwidth += instance.bids[i].package.bandwidth;
        antennas += instance.bids[i].package.antennas;
      }
    }
    if (bandwidth > instance.total_spectrum) {
      continue;
    }
    if (allocation_revenue(instance, bandwidth, antennas) < best.revenue) {
      continue;
    }
    Allocation candidate = make_allocation(instance, members);
    if (better_allocation(candidate, best)) {
      best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace cranauction
