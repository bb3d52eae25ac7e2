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

#include "softsimd/word.hpp"

#include <algorithm>
#include <cstdio>

#include "softsimd/error.hpp"

namespace softsimd {

namespace {

inline std::uint64_t bit(std::uint64_t v, int i) { return (v >> i) & 1U; }

void require_same_format(const PackedWord& a, const PackedWord& b, const char* op) {
  if (a.format() != b.format()) {
    throw DomainError(std::string(op) + ": format mismatch (" +
                      std::to_string(a.format().width()) + " vs " +
                      std::to_string(b.format().width()) + ")");
  }
}

// One stage of the shifter: every bit takes its upper neighbour except lane
// MSBs, which take fill_msb (their own bit for sign extension).
std::uint64_t shift_stage(std::uint64_t in, const BoundaryMask& mask, std::uint64_t fill_msb) {
  std::uint64_t out = 0;
  for (int i = 0; i < kDatapathBits; ++i) {
    const std::uint64_t b = mask.at(i) ? bit(in, i + 1) : bit(fill_msb, i);
    out |= b << i;
  }
  return out;
}

}  // namespace

SubwordFormat::SubwordFormat(int width) : width_(width) {
  if (!is_supported(width)) {
    throw DomainError("unsupported sub-word width " + std::to_string(width));
  }
}

bool SubwordFormat::is_supported(int width) noexcept {
  return std::find(kSupportedWidths.begin(), kSupportedWidths.end(), width) !=
         kSupportedWidths.end();
}

BoundaryMask::BoundaryMask(const SubwordFormat& fmt) : vx_(kDatapathMask) {
  for (int i = 0; i < kDatapathBits; ++i) {
    if ((i + 1) % fmt.width() == 0) vx_ &= ~(std::uint64_t{1} << i);
  }
}

PackedWord::PackedWord(std::uint64_t raw, SubwordFormat fmt) : raw_(raw), fmt_(fmt) {
  if (raw & ~kDatapathMask) {
    throw DomainError("packed word wider than 48 bits");
  }
}

PackedWord pack(std::span<const QVal> values, SubwordFormat fmt) {
  if (static_cast<int>(values.size()) != fmt.lanes()) {
    throw DomainError("pack: expected " + std::to_string(fmt.lanes()) + " values, got " +
                      std::to_string(values.size()));
  }
  const std::uint64_t lane_mask = (std::uint64_t{1} << fmt.width()) - 1;
  std::uint64_t raw = 0;
  for (int k = 0; k < fmt.lanes(); ++k) {
    const QVal& v = values[static_cast<std::size_t>(k)];
    if (v.width() != fmt.width()) {
      throw DomainError("pack: lane " + std::to_string(k) + " has width " +
                        std::to_string(v.width()) + ", format is " +
                        std::to_string(fmt.width()));
    }
    raw |= (static_cast<std::uint64_t>(v.bits()) & lane_mask) << (k * fmt.width());
  }
  return PackedWord(raw, fmt);
}

PackedWord pack_bits(std::span<const std::int32_t> bits, SubwordFormat fmt) {
  std::vector<QVal> values;
  values.reserve(bits.size());
  for (auto b : bits) values.emplace_back(b, fmt.width());
  return pack(values, fmt);
}

QVal extract_lane(const PackedWord& word, int lane) {
  const SubwordFormat& fmt = word.format();
  if (lane < 0 || lane >= fmt.lanes()) {
    throw DomainError("extract_lane: lane " + std::to_string(lane) + " out of range");
  }
  const int w = fmt.width();
  const std::uint64_t field = (word.raw() >> (lane * w)) & ((std::uint64_t{1} << w) - 1);
  const std::int64_t sign = std::int64_t{1} << (w - 1);
  const auto value = static_cast<std::int32_t>((static_cast<std::int64_t>(field) ^ sign) - sign);
  return QVal(value, w);
}

std::vector<std::int32_t> lanes_of(const PackedWord& word) {
  std::vector<std::int32_t> out;
  out.reserve(static_cast<std::size_t>(word.format().lanes()));
  for (int k = 0; k < word.format().lanes(); ++k) out.push_back(extract_lane(word, k).bits());
  return out;
}

AdderResult configurable_add(const PackedWord& a, const PackedWord& b, bool subtract) {
  require_same_format(a, b, "padd");
  const BoundaryMask mask(a.format());
  const std::uint64_t x = a.raw();
  const std::uint64_t y = subtract ? (~b.raw() & kDatapathMask) : b.raw();
  const std::uint64_t inject = subtract ? 1 : 0;

  AdderResult r;
  std::uint64_t carry = inject;
  for (int i = 0; i < kDatapathBits; ++i) {
    const std::uint64_t xi = bit(x, i);
    const std::uint64_t yi = bit(y, i);
    const std::uint64_t cout = (xi & yi) | (carry & (xi ^ yi));
    r.sum |= (xi ^ yi ^ carry) << i;
    if (mask.at(i)) {
      carry = cout;
    } else {
      // Lane MSB: the (w+1)-th sum bit is the sign of the extended operands
      // plus the carry out of this slice.
      r.guard |= (xi ^ yi ^ cout) << i;
      carry = inject;
    }
  }
  return r;
}

PackedWord padd(const PackedWord& a, const PackedWord& b, bool subtract) {
  return PackedWord(configurable_add(a, b, subtract).sum, a.format());
}

PackedWord pshift(const PackedWord& a, int sigma) {
  if (sigma < 1 || sigma > kMaxShift) {
    throw DomainError("pshift: sigma " + std::to_string(sigma) + " outside 1..3");
  }
  const BoundaryMask mask(a.format());
  std::uint64_t v = a.raw();
  for (int s = 0; s < sigma; ++s) v = shift_stage(v, mask, v);
  return PackedWord(v, a.format());
}

PackedWord fused_step(const PackedWord& acc, const PackedWord& m, int digit, int sigma) {
  require_same_format(acc, m, "fused_step");
  if (digit < -1 || digit > 1) {
    throw DomainError("fused_step: digit must be -1, 0 or +1");
  }
  if (sigma < 0 || sigma > kMaxShift) {
    throw DomainError("fused_step: sigma " + std::to_string(sigma) + " outside 0..3");
  }
  const BoundaryMask mask(acc.format());
  AdderResult sum;
  if (digit == 0) {
    sum.sum = acc.raw();
    sum.guard = acc.raw() & mask.msb_positions();
  } else {
    sum = configurable_add(acc, m, digit < 0);
  }
  std::uint64_t v = sum.sum;
  for (int s = 0; s < sigma; ++s) v = shift_stage(v, mask, s == 0 ? sum.guard : v);
  return PackedWord(v, acc.format());
}

std::string to_hex(const PackedWord& word) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%012llx", static_cast<unsigned long long>(word.raw()));
  return buf;
}

std::string lanes_to_string(const PackedWord& word) {
  std::string out;
  for (int k = 0; k < word.format().lanes(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(extract_lane(word, k).bits());
  }
  return out;
}

}  // namespace softsimd
