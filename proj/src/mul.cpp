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

#include "softsimd/mul.hpp"

#include <sstream>

#include "softsimd/error.hpp"
#include "softsimd/fxp.hpp"

namespace softsimd {

const char* to_string(StepOp op) noexcept {
  switch (op) {
    case StepOp::kLoad: return "load";
    case StepOp::kAdd: return "add";
    case StepOp::kSub: return "sub";
    case StepOp::kShift: return "shift";
  }
  return "?";
}

std::string MulTrace::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < per_step.size(); ++i) {
    const auto& e = per_step[i];
    os << "cycle=" << i << " op=" << to_string(e.op) << " sigma=" << e.step.shift
       << " acc=" << to_hex(e.acc) << '\n';
  }
  return os.str();
}

std::vector<StepOp> classify_steps(const Schedule& schedule) {
  std::vector<StepOp> ops;
  ops.reserve(schedule.steps.size());
  bool loaded = false;
  for (const auto& s : schedule.steps) {
    if (s.digit == 0) {
      ops.push_back(StepOp::kShift);
    } else if (!loaded) {
      ops.push_back(StepOp::kLoad);
      loaded = true;
    } else {
      ops.push_back(s.digit > 0 ? StepOp::kAdd : StepOp::kSub);
    }
  }
  return ops;
}

MulResult multiply_packed(const PackedWord& m, const CsdCode& multiplier) {
  const Schedule schedule = make_schedule(multiplier);
  const auto ops = classify_steps(schedule);

  MulResult r{PackedWord::zero(m.format()), {}};
  PackedWord acc = PackedWord::zero(m.format());
  for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
    const Step& s = schedule.steps[i];
    // A load overwrites; the accumulator only ever holds zero before it.
    acc = fused_step(acc, m, s.digit, s.shift);
    switch (ops[i]) {
      case StepOp::kLoad: ++r.trace.loads; break;
      case StepOp::kAdd:
      case StepOp::kSub: ++r.trace.adds; break;
      case StepOp::kShift: break;
    }
    r.trace.shift_bits += s.shift;
    r.trace.per_step.push_back({s, ops[i], acc});
  }
  r.trace.cycles = static_cast<int>(schedule.steps.size());
  r.product = acc;
  return r;
}

ScalarProduct multiply_scalar_detail(std::int32_t m_bits, int m_width, std::int32_t y_bits,
                                     int y_width) {
  const QVal m(m_bits, m_width);
  const QVal y(y_bits, y_width);

  // Non-adjacent form via the 3n identity: positive digits are the bits set
  // in 3n but not n, negative digits those set in n but not 3n (both >> 1).
  const std::int64_t n = y.bits();
  const std::int64_t three_n = 3 * n;
  const std::int64_t plus = (three_n & ~n) >> 1;
  const std::int64_t minus = (~three_n & n) >> 1;

  const std::int64_t lo = QVal::min_bits(m_width);
  const std::int64_t hi = QVal::max_bits(m_width);
  std::int64_t acc = 0;
  ScalarProduct out;
  for (int j = 0; j < y_width; ++j) {
    const std::int64_t digit = ((plus >> j) & 1) - ((minus >> j) & 1);
    acc += digit * m.bits();
    if (j + 1 < y_width) {
      acc >>= 1;  // arithmetic, i.e. floor
    } else {
      out.unwrapped = static_cast<std::int32_t>(acc);
      out.wrapped = acc < lo || acc > hi;
      const std::int64_t span = std::int64_t{1} << m_width;
      acc = ((acc - lo) % span + span) % span + lo;
    }
  }
  out.result = static_cast<std::int32_t>(acc);
  return out;
}

std::int32_t multiply_scalar_oracle(std::int32_t m_bits, int m_width, std::int32_t y_bits,
                                    int y_width) {
  return multiply_scalar_detail(m_bits, m_width, y_bits, y_width).result;
}

}  // namespace softsimd
