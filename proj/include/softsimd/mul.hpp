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

// Stage 1: serial CSD multiplication of every lane of a packed word by one
// broadcast multiplier.

#include <cstdint>
#include <string>
#include <vector>

#include "softsimd/csd.hpp"
#include "softsimd/word.hpp"

namespace softsimd {

enum class StepOp { kLoad, kAdd, kSub, kShift };

const char* to_string(StepOp op) noexcept;

struct TraceEntry {
  Step step;
  StepOp op;
  PackedWord acc;
};

struct MulTrace {
  int cycles = 0;
  int adds = 0;  // additions and subtractions
  int loads = 0;
  int shift_bits = 0;
  std::vector<TraceEntry> per_step;

  // One `cycle=<n> op=<op> sigma=<s> acc=<hex>` line per step.
  std::string to_text() const;
};

struct MulResult {
  PackedWord product;
  MulTrace trace;
};

// Classifies each step: digit 0 shifts, the first nonzero digit loads the
// accumulator, later ones add or subtract.
std::vector<StepOp> classify_steps(const Schedule& schedule);

MulResult multiply_packed(const PackedWord& m, const CsdCode& multiplier);

struct ScalarProduct {
  std::int32_t result = 0;     // w-bit value as written back
  std::int32_t unwrapped = 0;  // before the final wrap
  bool wrapped = false;
};

// Reference single-lane recurrence on plain integers. Recodes the multiplier
// on its own and processes one digit per iteration; it shares no code with
// the packed datapath.
ScalarProduct multiply_scalar_detail(std::int32_t m_bits, int m_width, std::int32_t y_bits,
                                     int y_width);

std::int32_t multiply_scalar_oracle(std::int32_t m_bits, int m_width, std::int32_t y_bits,
                                    int y_width);

}  // namespace softsimd
