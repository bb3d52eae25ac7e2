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

// Desk-scale reproductions: truncation error sweeps, CSD digit statistics,
// schedule length distributions and an event-count comparison against
// fixed-lane Hard SIMD baselines.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "softsimd/cost_model.hpp"
#include "softsimd/fxp.hpp"

namespace softsimd {

struct ErrorReport {
  int w = 0;
  int y = 0;
  bool sampled = false;
  std::uint64_t pairs = 0;
  // Products that wrapped on the final add; they are excluded from the
  // error statistics below and only counted here.
  std::uint64_t wrap_count = 0;
  std::uint64_t exact_count = 0;
  // Pairs left out of mean_rel_err because |exact| < one output ULP.
  std::uint64_t excluded_count = 0;
  double mean_rel_err = 0.0;
  double max_abs_err_ulp = 0.0;
  double mean_abs_err_ulp = 0.0;
};

// Exhaustive over all (m, y) operand pairs when w, y <= 8; otherwise draws
// `samples` pairs from a fixed-seed generator and sets `sampled`.
ErrorReport exhaustive_error(int w, int y, std::uint64_t samples = 1'000'000,
                             std::uint64_t seed = 0x5eed);

struct DensityReport {
  int y = 0;
  Rational mean_zero_fraction;
  double value() const { return boost::rational_cast<double>(mean_zero_fraction); }
};

// Mean fraction of zero CSD digits over every y-bit multiplier.
DensityReport csd_density(int y);

struct CycleStats {
  int y = 0;
  Rational mean;
  int min = 0;
  int max = 0;
};

// Schedule length over every y-bit multiplier.
CycleStats cycles_per_multiply(int y);

struct WorkloadItem {
  int w = 0;      // multiplicand width
  int y = 0;      // multiplier width
  std::uint64_t words = 0;  // 48-bit multiplicand words in the Soft SIMD format
};

struct ComparisonRow {
  WorkloadItem item;
  int soft_width = 0;
  int soft_lanes = 0;
  Rational soft_cycles_per_word;
  Rational soft_cycles_per_subword;
  double soft_cost_per_subword = 0.0;
  int hard_width = 0;
  int hard_lanes = 0;
  Rational hard_cycles_per_subword;
  double hard_cost_per_subword = 0.0;
  Rational cycle_ratio;   // soft / hard, per sub-word
  double cost_ratio = 0.0;
  std::uint64_t subwords = 0;
  Rational soft_total_cycles;
  std::uint64_t hard_total_cycles = 0;
};

// Baselines as sets of hard lane widths, e.g. {8, 16}.
std::vector<int> parse_baseline(const std::string& text);

// Soft SIMD: mean schedule cycles per word, all lanes in parallel, lane
// width snapped to the smallest supported format >= w. Hard SIMD: one
// multiply cycle per word with lane width = smallest baseline width >= w.
// Throws WorkloadError if w exceeds the widest baseline or Soft SIMD lane.
std::vector<ComparisonRow> compare_hard_simd(std::span<const WorkloadItem> workload,
                                             std::span<const int> baseline,
                                             const CostModel& model);

// Aligned plain-text rendering and `key=value` line records.
std::string format_error_table(const ErrorReport& r);
std::string format_error_record(const ErrorReport& r);
std::string format_comparison_table(std::span<const ComparisonRow> rows);
std::string format_comparison_records(std::span<const ComparisonRow> rows);

std::string rational_to_string(const Rational& r);

}  // namespace softsimd
