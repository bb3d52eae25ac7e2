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

#include "softsimd/fxp.hpp"

#include <cmath>
#include <string>

#include "softsimd/error.hpp"

namespace softsimd {

void check_width(int width) {
  if (width < kMinWidth || width > kMaxWidth) {
    throw DomainError("width " + std::to_string(width) + " outside [2, 16]");
  }
}

QVal::QVal(std::int32_t bits, int width) : bits_(bits), width_(width) {
  check_width(width);
  if (bits < min_bits(width) || bits > max_bits(width)) {
    throw DomainError("value " + std::to_string(bits) + " does not fit " +
                      std::to_string(width) + "-bit two's complement");
  }
}

QVal quantize(double x, int width) {
  check_width(width);
  if (!(x >= -1.0 && x < 1.0)) {
    throw DomainError("quantize: value outside [-1, 1)");
  }
  // Scaling by a power of two is exact in binary floating point.
  const double scaled = std::ldexp(x, width - 1);
  return QVal(static_cast<std::int32_t>(std::floor(scaled)), width);
}

Rational to_real(const QVal& v) {
  return Rational(v.bits(), std::int64_t{1} << (v.width() - 1));
}

Rational exact_product(const QVal& m, const QVal& y) {
  return to_real(m) * to_real(y);
}

}  // namespace softsimd
