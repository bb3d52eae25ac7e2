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

#include "softsimd/cost_model.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "softsimd/error.hpp"

namespace softsimd {

namespace {

constexpr std::array<std::string_view, 7> kKeys = {
    "add", "load", "shift_stage", "multiply", "repack", "reg_write", "stream_io"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

CostModel::CostModel() {
  for (auto k : kKeys) weights_.emplace(std::string(k), 1.0);
}

double CostModel::weight(const std::string& key) const {
  const auto it = weights_.find(key);
  if (it == weights_.end()) throw ConfigError("unknown cost key '" + key + "'");
  return it->second;
}

void CostModel::set(const std::string& key, double value) {
  const auto it = weights_.find(key);
  if (it == weights_.end()) throw ConfigError("unknown cost key '" + key + "'");
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ConfigError("cost weight for '" + key + "' must be a finite non-negative number");
  }
  it->second = value;
}

CostModel CostModel::scaled(double factor) const {
  CostModel out = *this;
  for (auto& [k, v] : out.weights_) out.set(k, v * factor);
  return out;
}

CostModel CostModel::parse(std::string_view text) {
  CostModel model;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("cost line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view val = trim(line.substr(eq + 1));
    double v = 0.0;
    const auto res = std::from_chars(val.data(), val.data() + val.size(), v);
    if (res.ec != std::errc{} || res.ptr != val.data() + val.size()) {
      throw ConfigError("cost line " + std::to_string(line_no) + ": malformed number '" +
                        std::string(val) + "'");
    }
    model.set(key, v);
  }
  return model;
}

double pipeline_cost(const EventCounters& e, const CostModel& m) {
  return m.weight("add") * static_cast<double>(e.adds) +
         m.weight("load") * static_cast<double>(e.loads) +
         m.weight("shift_stage") * static_cast<double>(e.shift_only) +
         m.weight("repack") * static_cast<double>(e.repacks) +
         m.weight("reg_write") * static_cast<double>(e.bypasses) +
         m.weight("stream_io") * static_cast<double>(e.reads + e.writes);
}

}  // namespace softsimd
