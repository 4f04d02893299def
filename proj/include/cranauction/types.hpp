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

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace cranauction {

// Bandwidth is kept in whole kHz so that spectrum accounting in the
// winner determination is exact.
using Kilohertz = std::int64_t;
using AntennaCount = std::int32_t;
using Kbps = double;
using Currency = double;

struct BidderId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(BidderId, BidderId) = default;
  friend std::ostream& operator<<(std::ostream& os, BidderId id) {
    return os << id.value;
  }
};

}  // namespace cranauction

template <>
struct std::hash<cranauction::BidderId> {
  std::size_t operator()(cranauction::BidderId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
