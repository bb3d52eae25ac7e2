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

// The 48-bit packed datapath. Lanes are laid out LSB first: lane k occupies
// bits [k*w, (k+1)*w). Arithmetic is modelled at bit level, one adder slice
// and one shifter mux per bit, gated by the per-format boundary mask.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "softsimd/csd.hpp"
#include "softsimd/fxp.hpp"

namespace softsimd {

inline constexpr int kDatapathBits = 48;
inline constexpr std::uint64_t kDatapathMask = (std::uint64_t{1} << kDatapathBits) - 1;
inline constexpr std::array<int, 5> kSupportedWidths = {4, 6, 8, 12, 16};

class SubwordFormat {
 public:
  // Throws DomainError unless width is one of kSupportedWidths.
  explicit SubwordFormat(int width);

  int width() const noexcept { return width_; }
  int lanes() const noexcept { return kDatapathBits / width_; }

  static bool is_supported(int width) noexcept;

  friend bool operator==(const SubwordFormat&, const SubwordFormat&) = default;

 private:
  int width_;
};

// V_x: bit i is 0 exactly where bit i is a lane MSB, 1 elsewhere.
class BoundaryMask {
 public:
  explicit BoundaryMask(const SubwordFormat& fmt);

  bool at(int bit) const noexcept { return (vx_ >> bit) & 1U; }
  std::uint64_t vx() const noexcept { return vx_; }
  // Complement of vx within the datapath: one bit set per lane MSB.
  std::uint64_t msb_positions() const noexcept { return ~vx_ & kDatapathMask; }

 private:
  std::uint64_t vx_;
};

class PackedWord {
 public:
  PackedWord(std::uint64_t raw, SubwordFormat fmt);

  static PackedWord zero(SubwordFormat fmt) { return PackedWord(0, fmt); }

  std::uint64_t raw() const noexcept { return raw_; }
  const SubwordFormat& format() const noexcept { return fmt_; }

  friend bool operator==(const PackedWord&, const PackedWord&) = default;

 private:
  std::uint64_t raw_;
  SubwordFormat fmt_;
};

PackedWord pack(std::span<const QVal> values, SubwordFormat fmt);
// Convenience for raw lane integers; each must fit the format width.
PackedWord pack_bits(std::span<const std::int32_t> bits, SubwordFormat fmt);

QVal extract_lane(const PackedWord& word, int lane);
std::vector<std::int32_t> lanes_of(const PackedWord& word);

// Output of the configurable adder: the 48-bit sum plus, at every lane MSB
// position, the sign of the untruncated (w+1)-bit lane sum.
struct AdderResult {
  std::uint64_t sum = 0;
  std::uint64_t guard = 0;
};

// Single ripple chain across all 48 bit slices. At a lane MSB the carry out
// is captured instead of propagated and the next lane's carry in is forced
// to the subtract flag, so a - b = a + ~b + 1 per lane.
AdderResult configurable_add(const PackedWord& a, const PackedWord& b, bool subtract);

PackedWord padd(const PackedWord& a, const PackedWord& b, bool subtract);

// Per-lane arithmetic right shift by sigma in 1..3, built from sigma
// cascaded one-bit mux stages that replicate each lane MSB.
PackedWord pshift(const PackedWord& a, int sigma);

// floor((acc + digit*m) / 2^sigma) per lane, with the adder's guard bit
// shifted in at each lane MSB on the first shift stage. sigma = 0 writes the
// w-bit sum back, wrapping on overflow.
PackedWord fused_step(const PackedWord& acc, const PackedWord& m, int digit, int sigma);

// 12 hex digits.
std::string to_hex(const PackedWord& word);
// Signed decimal lanes, LSB lane first, comma separated.
std::string lanes_to_string(const PackedWord& word);

}  // namespace softsimd
