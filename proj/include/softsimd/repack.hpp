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

// Stage 2: a bit crossbar from the two Stage-1 output registers (R2, R3) to
// the Stage-2 output, converting between SIMD formats. Lanes are Q1 values,
// so widening places the source MSB-aligned and zero-fills below, while
// narrowing keeps the top bits of each source lane.

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "softsimd/word.hpp"

namespace softsimd {

enum class RepackDirection { kWiden, kNarrow };

struct BitSource {
  enum class Reg : std::uint8_t { kZero, kR2, kR3 };
  Reg reg = Reg::kZero;
  int bit = 0;

  friend bool operator==(const BitSource&, const BitSource&) = default;
};

using RepackPair = std::pair<int, int>;  // (from_w, to_w)

// Every integer-ratio conversion among the supported widths.
const std::vector<RepackPair>& all_repack_pairs();

// Number of invocations (group selectors) needed to convert a full register
// set: the ratio when widening, ceil(ratio / 2) when narrowing since each
// narrowing pass consumes two source registers.
int repack_group_count(int from_w, int to_w);

class RepackConfig {
 public:
  int from_w() const noexcept { return from_w_; }
  int to_w() const noexcept { return to_w_; }
  int ratio() const noexcept { return ratio_; }
  int group() const noexcept { return group_; }
  RepackDirection direction() const noexcept { return direction_; }
  const std::array<BitSource, kDatapathBits>& mapping() const noexcept { return mapping_; }

  // Narrowing passes after the first fill output lanes the first pass left
  // zero; their result is OR-ed into the output register.
  bool merges_into_output() const noexcept {
    return direction_ == RepackDirection::kNarrow && group_ > 0;
  }
  bool reads_r3() const noexcept;

  // One `out[i] <- R2[j] | R3[j] | 0` line per output bit.
  std::string dump() const;

 private:
  friend RepackConfig make_repack_config(int, int, int, const std::set<RepackPair>*);

  RepackConfig() = default;
  int from_w_ = 0;
  int to_w_ = 0;
  int ratio_ = 1;
  int group_ = 0;
  RepackDirection direction_ = RepackDirection::kWiden;
  std::array<BitSource, kDatapathBits> mapping_{};
};

// enabled restricts the accepted pairs; nullptr enables all of them.
// Throws ConfigError for unsupported pairs or group selectors.
RepackConfig make_repack_config(int from_w, int to_w, int group = 0,
                                const std::set<RepackPair>* enabled = nullptr);

PackedWord apply_repack(const RepackConfig& cfg, const PackedWord& r2, const PackedWord& r3);

PackedWord bypass(const PackedWord& r2);

// Whole-word helpers composing every group of a conversion.
std::vector<PackedWord> widen_word(const PackedWord& word, int to_w);
PackedWord narrow_words(std::span<const PackedWord> words, int to_w);

}  // namespace softsimd
