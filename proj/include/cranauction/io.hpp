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

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>

#include "cranauction/clock_engine.hpp"
#include "cranauction/sweep.hpp"
#include "cranauction/winner_determination.hpp"

namespace cranauction {

/// Loads an INI-style run configuration with sections [market], [bidder]
/// and [sweep]. Keys carry the field names of MarketConfig, BidderProfile
/// and SweepSpec; axes are comma-separated lists. Missing keys keep their
/// defaults, unknown keys are rejected. The [sweep] section is optional, so
/// the result is only validated as a sweep by run_sweep().
SweepSpec load_config(const std::filesystem::path& path);
SweepSpec parse_config(std::istream& in);

/// Per-round trace, one line per bidder and round:
/// round,price,bidder,antennas,bandwidth,cost,action
void write_round_trace(std::ostream& os, const ClockResult& clock,
                       std::span<const BidderProfile> bidders);

/// Reads WDP bids from CSV with header `bidder_id,antennas,bandwidth`.
/// Prices and supply come from the caller since they are round-wide.
WdpInstance read_wdp_instance(std::istream& in, Kilohertz total_spectrum,
                              Currency p_spectrum, Currency p_antenna);

/// bidder_id,antennas,bandwidth,revenue for each winner, then a summary line.
void write_allocation(std::ostream& os, const WdpInstance& instance,
                      const Allocation& allocation);

}  // namespace cranauction
