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

#include "cranauction/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cranauction/errors.hpp"

namespace cranauction {

namespace {

namespace pt = boost::property_tree;

template <typename T>
void read_key(const pt::ptree& section, const char* key, T& field) {
  if (auto value = section.get_optional<std::string>(key)) {
    try {
      field = boost::lexical_cast<T>(boost::trim_copy(*value));
    } catch (const boost::bad_lexical_cast&) {
      throw ConfigError(fmt::format("cannot parse '{}' for key {}", *value, key));
    }
  }
}

std::vector<double> read_list(const pt::ptree& section, const char* key) {
  std::vector<double> values;
  const auto raw = section.get_optional<std::string>(key);
  if (!raw) {
    return values;
  }
  std::vector<std::string> parts;
  boost::split(parts, *raw, boost::is_any_of(","));
  for (auto& part : parts) {
    boost::trim(part);
    if (part.empty()) {
      continue;
    }
    try {
      values.push_back(boost::lexical_cast<double>(part));
    } catch (const boost::bad_lexical_cast&) {
      throw ConfigError(fmt::format("cannot parse '{}' in list {}", part, key));
    }
  }
  return values;
}

void reject_unknown(const pt::ptree& section, const std::string& name,
                    const std::set<std::string>& known) {
  for (const auto& [key, _] : section) {
    if (!known.contains(key)) {
      throw ConfigError(fmt::format("unknown key [{}] {}", name, key));
    }
  }
}

}  // namespace

SweepSpec parse_config(std::istream& in) {
  // Inline comments (';' or '#') are stripped before the INI parser sees them.
  std::stringstream cleaned;
  for (std::string line; std::getline(in, line);) {
    cleaned << line.substr(0, line.find_first_of(";#")) << '\n';
  }
  pt::ptree tree;
  try {
    pt::read_ini(cleaned, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  static const std::map<std::string, std::set<std::string>> kKnown = {
      {"market",
       {"total_antennas", "total_spectrum", "snr_linear", "num_bidders", "spectrum_unit",
        "reserve_spectrum_price", "price_increment", "rng_seed", "max_rounds"}},
      {"bidder", {"r_min", "value_per_kbps", "min_antennas", "min_bandwidth", "value_spread"}},
      {"sweep", {"rate_axis", "antenna_cost_axis"}},
  };
  for (const auto& [name, section] : tree) {
    auto it = kKnown.find(name);
    if (it == kKnown.end()) {
      throw ConfigError("unknown section [" + name + "]");
    }
    reject_unknown(section, name, it->second);
  }

  SweepSpec spec;
  spec.base_bidder.value_per_kbps = 1.0;
  const pt::ptree empty;
  const auto& market = tree.get_child("market", empty);
  MarketConfig& m = spec.base_market;
  read_key(market, "total_antennas", m.total_antennas);
  read_key(market, "total_spectrum", m.total_spectrum);
  read_key(market, "snr_linear", m.snr_linear);
  read_key(market, "num_bidders", m.num_bidders);
  read_key(market, "spectrum_unit", m.spectrum_unit);
  read_key(market, "reserve_spectrum_price", m.reserve_spectrum_price);
  read_key(market, "price_increment", m.price_increment);
  read_key(market, "rng_seed", m.rng_seed);
  read_key(market, "max_rounds", m.max_rounds);

  const auto& bidder = tree.get_child("bidder", empty);
  BidderProfile& b = spec.base_bidder;
  read_key(bidder, "r_min", b.r_min);
  read_key(bidder, "value_per_kbps", b.value_per_kbps);
  read_key(bidder, "min_antennas", b.min_antennas);
  read_key(bidder, "min_bandwidth", b.min_bandwidth);
  read_key(bidder, "value_spread", spec.value_spread);

  const auto& sweep = tree.get_child("sweep", empty);
  spec.rate_axis = read_list(sweep, "rate_axis");
  spec.antenna_cost_axis = read_list(sweep, "antenna_cost_axis");
  return spec;
}

SweepSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config " + path.string());
  }
  try {
    return parse_config(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void write_round_trace(std::ostream& os, const ClockResult& clock,
                       std::span<const BidderProfile> bidders) {
  os << "round,price,bidder,antennas,bandwidth,cost,action\n";
  for (const auto& round : clock.rounds) {
    for (std::size_t i = 0; i < round.packages.size(); ++i) {
      const auto& pkg = round.packages[i];
      const BidderId id = bidders[i].id;
      const bool bid = std::any_of(round.bids.begin(), round.bids.end(),
                                   [&](const PackageBid& b) { return b.bidder_id == id; });
      fmt::print(os, "{},{},{},{},{},{},{}\n", round.round_index, round.p_spectrum,
                 id.value, pkg.antennas, pkg.bandwidth, pkg.cost, bid ? "bid" : "abstain");
    }
  }
}

WdpInstance read_wdp_instance(std::istream& in, Kilohertz total_spectrum,
                              Currency p_spectrum, Currency p_antenna) {
  WdpInstance instance{{}, total_spectrum, p_spectrum, p_antenna};
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    boost::trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    std::vector<std::string> fields;
    boost::split(fields, line, boost::is_any_of(","));
    for (auto& f : fields) {
      boost::trim(f);
    }
    if (!header_seen) {
      header_seen = true;
      if (fields.size() < 3 || fields[0] != "bidder_id" || fields[1] != "antennas" ||
          fields[2] != "bandwidth") {
        throw ConfigError("WDP instance must start with header bidder_id,antennas,bandwidth");
      }
      continue;
    }
    if (fields.size() < 3) {
      throw ConfigError(fmt::format("line {}: expected 3 columns", line_no));
    }
    try {
      PackageBid bid;
      bid.bidder_id = BidderId{boost::lexical_cast<std::uint32_t>(fields[0])};
      bid.package.antennas = boost::lexical_cast<AntennaCount>(fields[1]);
      bid.package.bandwidth = boost::lexical_cast<Kilohertz>(fields[2]);
      if (bid.package.antennas < 0 || bid.package.bandwidth < 0) {
        throw ConfigError(fmt::format("line {}: negative quantity", line_no));
      }
      bid.package.cost = package_cost(p_spectrum, p_antenna, bid.package.bandwidth,
                                      bid.package.antennas);
      instance.bids.push_back(bid);
    } catch (const boost::bad_lexical_cast&) {
      throw ConfigError(fmt::format("line {}: cannot parse '{}'", line_no, line));
    }
  }
  return instance;
}

void write_allocation(std::ostream& os, const WdpInstance& instance,
                      const Allocation& allocation) {
  os << "bidder_id,antennas,bandwidth,revenue\n";
  for (const auto& bid : allocation.winning_bids) {
    fmt::print(os, "{},{},{},{}\n", bid.bidder_id.value, bid.package.antennas,
               bid.package.bandwidth,
               package_cost(instance.p_spectrum, instance.p_antenna, bid.package.bandwidth,
                            bid.package.antennas));
  }
  fmt::print(os, "# winners={} spectrum_used={} revenue={} optimal={}\n",
             allocation.winning_bids.size(), allocation.spectrum_used, allocation.revenue,
             allocation.optimal ? "true" : "false");
}

}  // namespace cranauction
