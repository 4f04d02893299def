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

#include <stdexcept>
#include <string>

namespace cranauction {

/// Invalid market, bidder or sweep configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brute-force oracle refused an instance that would blow up.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An allocation or outcome disagrees with the clock history it came from.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cranauction
