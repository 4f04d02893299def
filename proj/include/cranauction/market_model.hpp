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

#include "cranauction/types.hpp"

namespace cranauction {

/// Global market parameters shared by every module.
struct MarketConfig {
  AntennaCount total_antennas = 64;
  Kilohertz total_spectrum = 50'000;
  double snr_linear = 10.0;
  std::int32_t num_bidders = 20;
  Kilohertz spectrum_unit = 1;
  Currency reserve_spectrum_price = 0.01;
  Currency price_increment = 0.01;
  std::uint64_t rng_seed = 1;
  // Safety cap on clock rounds; the clock halts long before this for any
  // finite budgets, so hitting it signals a misconfigured market.
  std::int64_t max_rounds = 10'000'000;

  /// Throws ConfigError when an invariant is broken.
  void validate() const;
};

/// Achievable-rate model: rate = B * log2(1 + snr * m).
///
/// The gain per antenna is logarithmic (power gain only, no spatial
/// multiplexing); bandwidth enters linearly. Units are kHz in, Kbps out.
class RateModel {
 public:
  explicit RateModel(double snr_linear);

  double snr_linear() const { return snr_linear_; }

  /// Spectral efficiency log2(1 + snr * m) in bits/s/Hz.
  double spectral_efficiency(AntennaCount antennas) const;

  /// Rate in Kbps delivered over `bandwidth` kHz with `antennas` antennas.
  /// Throws std::invalid_argument when antennas < 1 or bandwidth < 0.
  Kbps rate(double bandwidth, AntennaCount antennas) const;

  /// Continuous bandwidth (kHz) that meets `min_rate` exactly.
  double required_bandwidth_exact(Kbps min_rate, AntennaCount antennas) const;

  /// Smallest multiple of `unit` kHz whose rate meets `min_rate`.
  /// Postcondition: rate(result) >= min_rate and rate(result - unit) < min_rate.
  Kilohertz required_bandwidth(Kbps min_rate, AntennaCount antennas,
                               Kilohertz unit) const;

 private:
  double snr_linear_;
};

/// Rounds a non-negative bandwidth up to the next multiple of `unit`.
Kilohertz round_up_to_unit(double bandwidth, Kilohertz unit);

}  // namespace cranauction
