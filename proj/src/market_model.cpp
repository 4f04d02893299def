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

#include "cranauction/market_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cranauction/errors.hpp"

namespace cranauction {

void MarketConfig::validate() const {
  if (total_antennas < 1) {
    throw ConfigError("total_antennas must be >= 1");
  }
  if (total_spectrum <= 0) {
    throw ConfigError("total_spectrum must be > 0");
  }
  if (spectrum_unit <= 0 || total_spectrum % spectrum_unit != 0) {
    throw ConfigError("spectrum_unit must be positive and divide total_spectrum");
  }
  if (!(snr_linear > 0.0) || !std::isfinite(snr_linear)) {
    throw ConfigError("snr_linear must be a finite positive number");
  }
  if (!(price_increment > 0.0) || !std::isfinite(price_increment)) {
    throw ConfigError("price_increment must be > 0, otherwise the clock never halts");
  }
  if (!(reserve_spectrum_price >= 0.0) || !std::isfinite(reserve_spectrum_price)) {
    throw ConfigError("reserve_spectrum_price must be >= 0");
  }
  if (num_bidders < 0) {
    throw ConfigError("num_bidders must be >= 0");
  }
  if (max_rounds < 1) {
    throw ConfigError("max_rounds must be >= 1");
  }
}

RateModel::RateModel(double snr_linear) : snr_linear_(snr_linear) {
  if (!(snr_linear > 0.0) || !std::isfinite(snr_linear)) {
    throw std::invalid_argument("snr_linear must be a finite positive number");
  }
}

double RateModel::spectral_efficiency(AntennaCount antennas) const {
  if (antennas < 1) {
    throw std::invalid_argument("antenna count must be >= 1, got " +
                                std::to_string(antennas));
  }
  return std::log2(1.0 + snr_linear_ * static_cast<double>(antennas));
}

Kbps RateModel::rate(double bandwidth, AntennaCount antennas) const {
  if (bandwidth < 0.0 || std::isnan(bandwidth)) {
    throw std::invalid_argument("bandwidth must be >= 0");
  }
  return bandwidth * spectral_efficiency(antennas);
}

double RateModel::required_bandwidth_exact(Kbps min_rate,
                                           AntennaCount antennas) const {
  if (!(min_rate > 0.0) || !std::isfinite(min_rate)) {
    throw std::invalid_argument("required rate must be a finite positive number");
  }
  return min_rate / spectral_efficiency(antennas);
}

Kilohertz RateModel::required_bandwidth(Kbps min_rate, AntennaCount antennas,
                                        Kilohertz unit) const {
  if (unit <= 0) {
    throw std::invalid_argument("spectrum unit must be positive");
  }
  const double exact = required_bandwidth_exact(min_rate, antennas);
  auto units = static_cast<Kilohertz>(std::ceil(exact / static_cast<double>(unit)));
  // ceil() of a rounded quotient can land one unit off either way.
  while (rate(static_cast<double>(units * unit), antennas) < min_rate) {
    ++units;
  }
  while (units > 0 &&
         rate(static_cast<double>((units - 1) * unit), antennas) >= min_rate) {
    --units;
  }
  return units * unit;
}

Kilohertz round_up_to_unit(double bandwidth, Kilohertz unit) {
  if (bandwidth <= 0.0) {
    return 0;
  }
  auto units = static_cast<Kilohertz>(std::ceil(bandwidth / static_cast<double>(unit)));
  if (static_cast<double>((units - 1) * unit) >= bandwidth) {
    --units;
  }
  return units * unit;
}

}  // namespace cranauction
