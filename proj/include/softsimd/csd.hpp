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

// Canonical signed digit recoding of multipliers and the zero-run coalesced
// shift-add schedules that Stage 1 executes.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace softsimd {

inline constexpr int kMaxShift = 3;

class CsdCode {
 public:
  // digits are LSB first; each must be -1, 0 or +1. Canonicity is not
  // enforced here so that callers can represent (and reject) arbitrary
  // signed-digit vectors.
  explicit CsdCode(std::vector<std::int8_t> digits);

  // Parses the MSB-first textual form, e.g. "0-01".
  static CsdCode parse(std::string_view text);

  const std::vector<std::int8_t>& digits() const noexcept { return digits_; }
  int width() const noexcept { return static_cast<int>(digits_.size()); }

  bool is_canonical() const noexcept;
  int nonzero_count() const noexcept;

  // MSB-first rendering using '1', '0', '-'.
  std::string to_string() const;

  friend bool operator==(const CsdCode&, const CsdCode&) = default;

 private:
  std::vector<std::int8_t> digits_;
};

struct Step {
  std::int8_t digit = 0;
  int shift = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Schedule {
  std::vector<Step> steps;
  int multiplier_width = 0;

  int total_shift() const noexcept;
};

struct ScheduleStats {
  int zeros = 0;
  int nonzeros = 0;
  int steps = 0;
  int adds = 0;

  friend bool operator==(const ScheduleStats&, const ScheduleStats&) = default;
};

CsdCode csd_encode(std::int64_t value, int width);
std::int64_t csd_decode(const CsdCode& code);

// Walks digits LSB to MSB. Each nonzero digit becomes one step whose shift
// covers the zero run above it, capped at max_shift; longer runs (and the
// zeros below the first nonzero digit) become digit-0 filler steps. The
// topmost nonzero digit takes the residual shift, which is 0 when it sits
// in the MSB position.
Schedule make_schedule(const CsdCode& code, int max_shift = kMaxShift);

ScheduleStats schedule_stats(const CsdCode& code);

}  // namespace softsimd
