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

#include "softsimd/analysis.hpp"

#include <cmath>

#include "doctest.h"
#include "softsimd/csd.hpp"
#include "softsimd/error.hpp"

namespace softsimd {
namespace {

TEST_CASE("error sweep at 8x8") {
  const auto r = exhaustive_error(8, 8);
  CHECK_FALSE(r.sampled);
  CHECK(r.pairs == 65536);
  CHECK(r.wrap_count == 1);
  CHECK(r.exact_count == 2303);
  CHECK(r.excluded_count == 3059);
  CHECK(r.max_abs_err_ulp == 127.0 / 128.0);
  CHECK(r.max_abs_err_ulp < 2.0);
  CHECK(r.mean_rel_err == doctest::Approx(0.046698).epsilon(1e-4));
}

TEST_CASE("error sweep: zero multiplicand contributes no error") {
  const auto r = exhaustive_error(2, 8);
  // m in {-2..1} at w=2 includes 0; those 256 pairs are exact.
  CHECK(r.exact_count >= 256);
}

TEST_CASE("error sweep samples beyond 8 bits") {
  const auto r = exhaustive_error(12, 12, 20000);
  CHECK(r.sampled);
  CHECK(r.pairs == 20000);
  CHECK(r.max_abs_err_ulp < 2.0);
  CHECK(exhaustive_error(12, 12, 20000).mean_rel_err == r.mean_rel_err);
}

TEST_CASE("csd density") {
  // Enumerated: -2 "-0", -1 "0-", 0 "00", 1 "01" -> 5 zeros of 8 digits.
  CHECK(csd_density(2).mean_zero_fraction == Rational(5, 8));
  CHECK(csd_density(12).mean_zero_fraction == Rational(10771, 16384));
  const double d12 = csd_density(12).value();
  CHECK(d12 >= 0.63);
  CHECK(d12 <= 0.70);
  double prev = 1.0;
  for (int y : {4, 6, 8, 10, 12}) {
    const double gap = std::abs(csd_density(y).value() - 2.0 / 3.0);
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("cycles per multiply") {
  const auto c8 = cycles_per_multiply(8);
  CHECK(c8.mean == Rational(953, 256));
  CHECK(c8.min == 3);
  CHECK(c8.max == 5);
  CHECK(schedule_stats(csd_encode(115, 8)).steps == 4);
  CHECK(schedule_stats(csd_encode(0, 8)).steps == 3);
  for (int y = 3; y <= 12; ++y) {
    const auto c = cycles_per_multiply(y);
    CHECK(c.mean < Rational(y - 1));
    CHECK(c.max <= y - 1);
    CHECK(c.min >= (y - 1 + 2) / 3);
  }
}

TEST_CASE("hard simd comparison") {
  const std::vector<int> b816 = {8, 16};
  const std::vector<WorkloadItem> wl = {{8, 8, 10}, {9, 8, 10}};
  const auto rows = compare_hard_simd(wl, b816, CostModel{});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].hard_lanes == 6);
  CHECK(rows[1].hard_lanes == 3);
  CHECK(rows[1].hard_width == 16);
  CHECK(rows[0].soft_lanes == 6);
  CHECK(rows[0].soft_cycles_per_word == cycles_per_multiply(8).mean);
  CHECK(rows[0].subwords == 60);
  CHECK(rows[0].hard_total_cycles == 10);
  CHECK(rows[1].subwords == 40);
  CHECK(rows[1].hard_total_cycles == 14);

  CHECK(compare_hard_simd({}, b816, CostModel{}).empty());
  const std::vector<WorkloadItem> too_wide = {{17, 8, 1}};
  CHECK_THROWS_AS(compare_hard_simd(too_wide, b816, CostModel{}), WorkloadError);
  const std::vector<int> b8 = {8};
  const std::vector<WorkloadItem> nine = {{9, 8, 1}};
  CHECK_THROWS_AS(compare_hard_simd(nine, b8, CostModel{}), WorkloadError);
}

TEST_CASE("unit weights reduce to cycle ratios; scaling leaves ratios unchanged") {
  std::vector<WorkloadItem> wl;
  for (int w = 2; w <= 16; ++w) wl.push_back({w, 2 + (w * 5) % 15, 3});
  const auto base = parse_baseline("4,6,8,12,16");
  CostModel skew;
  skew.set("add", 2.5);
  skew.set("load", 0.75);
  skew.set("shift_stage", 0.3);
  skew.set("multiply", 7.0);
  const auto unit = compare_hard_simd(wl, base, CostModel{});
  const auto a = compare_hard_simd(wl, base, skew);
  const auto b = compare_hard_simd(wl, base, skew.scaled(13.0));
  for (std::size_t i = 0; i < wl.size(); ++i) {
    CHECK(unit[i].cost_ratio ==
          doctest::Approx(boost::rational_cast<double>(unit[i].cycle_ratio)).epsilon(1e-12));
    CHECK(a[i].cost_ratio == doctest::Approx(b[i].cost_ratio).epsilon(1e-12));
  }
}

TEST_CASE("cost model parsing") {
  const auto m = CostModel::parse("# weights\nadd = 2\n load=0.5 \n\nmultiply = 4 # hard\n");
  CHECK(m.weight("add") == 2.0);
  CHECK(m.weight("load") == 0.5);
  CHECK(m.weight("multiply") == 4.0);
  CHECK(m.weight("repack") == 1.0);
  CHECK_THROWS_AS(CostModel::parse("adds = 1\n"), ConfigError);
  CHECK_THROWS_AS(CostModel::parse("add = -1\n"), ConfigError);
  CHECK_THROWS_AS(CostModel::parse("add = x\n"), ConfigError);
  CHECK_THROWS_AS(CostModel::parse("add 1\n"), ConfigError);
}

TEST_CASE("baseline parsing") {
  CHECK(parse_baseline("16,8") == std::vector<int>{8, 16});
  CHECK_THROWS_AS(parse_baseline("8,5"), ConfigError);
  CHECK_THROWS_AS(parse_baseline(""), ConfigError);
}

TEST_CASE("reports never print physical energy units") {
  const std::vector<WorkloadItem> wl = {{8, 8, 1}};
  const std::vector<int> b = {8, 16};
  const auto rows = compare_hard_simd(wl, b, CostModel{});
  const std::string table = format_comparison_table(rows);
  CHECK(table.find("pJ") == std::string::npos);
  CHECK(table.find("UNCALIBRATED") != std::string::npos);
  CHECK(format_comparison_records(rows).find("cycle_ratio=") != std::string::npos);
}

}  // namespace
}  // namespace softsimd
