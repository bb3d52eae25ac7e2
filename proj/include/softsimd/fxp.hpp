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

// Q1.X fixed-point values: one sign/integer bit, w-1 fractional bits,
// carried as a w-bit two's-complement integer.

#include <cstdint>

#include <boost/rational.hpp>

namespace softsimd {

using Rational = boost::rational<std::int64_t>;

inline constexpr int kMinWidth = 2;
inline constexpr int kMaxWidth = 16;

class QVal {
 public:
  // Throws DomainError when bits does not fit a w-bit two's-complement lane.
  QVal(std::int32_t bits, int width);

  std::int32_t bits() const noexcept { return bits_; }
  int width() const noexcept { return width_; }

  static std::int32_t min_bits(int width) noexcept { return -(std::int32_t{1} << (width - 1)); }
  static std::int32_t max_bits(int width) noexcept { return (std::int32_t{1} << (width - 1)) - 1; }

  friend bool operator==(const QVal&, const QVal&) = default;

 private:
  std::int32_t bits_;
  int width_;
};

void check_width(int width);

// floor(x * 2^(w-1)); x must lie in [-1, 1).
QVal quantize(double x, int width);

// bits / 2^(w-1), exact.
Rational to_real(const QVal& v);

Rational exact_product(const QVal& m, const QVal& y);

}  // namespace softsimd
