// Copyright 2026 The softsimd Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "softsimd/pipeline.hpp"

namespace softsimd {

// Unit-free event weights. Nothing here is calibrated against silicon; the
// defaults are all 1.0, under which every weighted cost reduces to a cycle
// or event count.
//
// Keys: load, add, shift_stage (a multiply cycle that only shifts),
// multiply (one Hard SIMD multiply cycle), repack, reg_write (bypass
// writes), stream_io (LDW/STW).
class CostModel {
 public:
  CostModel();

  // `key = value` lines; `#` comments. Unknown keys and negative or
  // non-numeric weights throw ConfigError.
  static CostModel parse(std::string_view text);

  double weight(const std::string& key) const;
  void set(const std::string& key, double value);
  CostModel scaled(double factor) const;

  const std::map<std::string, double>& weights() const noexcept { return weights_; }

  // Always "UNCALIBRATED"; reports print it next to every weighted cost.
  static constexpr std::string_view kUnitLabel = "cost units (UNCALIBRATED)";

 private:
  std::map<std::string, double> weights_;
};

double pipeline_cost(const EventCounters& events, const CostModel& model);

}  // namespace softsimd
