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

#include "softsimd/csd.hpp"

#include <algorithm>

#include "softsimd/error.hpp"
#include "softsimd/fxp.hpp"

namespace softsimd {

CsdCode::CsdCode(std::vector<std::int8_t> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) {
    throw DomainError("CSD code must have at least one digit");
  }
  for (auto d : digits_) {
    if (d < -1 || d > 1) {
      throw DomainError("CSD digit " + std::to_string(d) + " not in {-1, 0, +1}");
    }
  }
}

CsdCode CsdCode::parse(std::string_view text) {
  std::vector<std::int8_t> digits;
  digits.reserve(text.size());
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    switch (*it) {
      case '1': digits.push_back(1); break;
      case '0': digits.push_back(0); break;
      case '-': digits.push_back(-1); break;
      default:
        throw DomainError("invalid CSD character '" + std::string(1, *it) + "'");
    }
  }
  return CsdCode(std::move(digits));
}

bool CsdCode::is_canonical() const noexcept {
  for (std::size_t j = 0; j + 1 < digits_.size(); ++j) {
    if (digits_[j] != 0 && digits_[j + 1] != 0) return false;
  }
  return true;
}

int CsdCode::nonzero_count() const noexcept {
  return static_cast<int>(std::count_if(digits_.begin(), digits_.end(),
                                        [](std::int8_t d) { return d != 0; }));
}

std::string CsdCode::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    out.push_back(*it == 0 ? '0' : (*it > 0 ? '1' : '-'));
  }
  return out;
}

int Schedule::total_shift() const noexcept {
  int sum = 0;
  for (const auto& s : steps) sum += s.shift;
  return sum;
}

CsdCode csd_encode(std::int64_t value, int width) {
  check_width(width);
  const std::int64_t lo = -(std::int64_t{1} << (width - 1));
  const std::int64_t hi = (std::int64_t{1} << (width - 1)) - 1;
  if (value < lo || value > hi) {
    throw DomainError("csd_encode: " + std::to_string(value) + " outside " +
                      std::to_string(width) + "-bit range");
  }
  // Non-adjacent form: an odd residue picks the digit that leaves a multiple
  // of four, which forces the next digit to zero.
  std::vector<std::int8_t> digits(static_cast<std::size_t>(width), 0);
  std::int64_t n = value;
  for (int j = 0; n != 0; ++j) {
    if (n & 1) {
      const std::int64_t mod4 = n & 3;
      const std::int8_t d = mod4 == 1 ? 1 : -1;
      digits.at(static_cast<std::size_t>(j)) = d;
      n -= d;
    }
    n /= 2;
  }
  return CsdCode(std::move(digits));
}

std::int64_t csd_decode(const CsdCode& code) {
  std::int64_t sum = 0;
  const auto& d = code.digits();
  for (std::size_t j = 0; j < d.size(); ++j) {
    sum += static_cast<std::int64_t>(d[j]) * (std::int64_t{1} << j);
  }
  return sum;
}

namespace {

void emit_fillers(std::vector<Step>& steps, int remaining, int max_shift) {
  while (remaining > 0) {
    const int s = std::min(max_shift, remaining);
    steps.push_back({0, s});
    remaining -= s;
  }
}

}  // namespace

Schedule make_schedule(const CsdCode& code, int max_shift) {
  if (!code.is_canonical()) {
    throw DomainError("make_schedule: non-canonical code " + code.to_string());
  }
  if (max_shift < 1) {
    throw DomainError("make_schedule: max_shift must be positive");
  }
  const int y = code.width();
  const auto& d = code.digits();

  std::vector<int> nonzero;
  for (int j = 0; j < y; ++j) {
    if (d[static_cast<std::size_t>(j)] != 0) nonzero.push_back(j);
  }

  Schedule sched;
  sched.multiplier_width = y;
  if (nonzero.empty()) {
    emit_fillers(sched.steps, y - 1, max_shift);
    return sched;
  }

  emit_fillers(sched.steps, nonzero.front(), max_shift);
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    const int j = nonzero[i];
    const int span = i + 1 < nonzero.size() ? nonzero[i + 1] - j : (y - 1) - j;
    const int s = std::min(max_shift, span);
    sched.steps.push_back({d[static_cast<std::size_t>(j)], s});
    emit_fillers(sched.steps, span - s, max_shift);
  }
  return sched;
}

ScheduleStats schedule_stats(const CsdCode& code) {
  ScheduleStats st;
  st.nonzeros = code.nonzero_count();
  st.zeros = code.width() - st.nonzeros;
  st.steps = static_cast<int>(make_schedule(code).steps.size());
  st.adds = std::max(0, st.nonzeros - 1);
  return st;
}

}  // namespace softsimd
