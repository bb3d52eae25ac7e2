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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "softsimd/csd.hpp"
#include "softsimd/error.hpp"
#include "softsimd/mul.hpp"
#include "softsimd/word.hpp"

namespace softsimd {

namespace {

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Locale-independent shortest round-trip rendering.
std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits) {
  if (!std::isfinite(v)) return num(v);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

struct Accumulator {
  std::uint64_t pairs = 0;
  std::uint64_t wraps = 0;
  std::uint64_t exact = 0;
  std::uint64_t excluded = 0;
  std::uint64_t rel_count = 0;
  std::int64_t max_err_num = 0;
  CompensatedSum rel;
  CompensatedSum abs_ulp;

  // Errors are kept as integers in units of 2^-(w-1+y-1): the product
  // m*y is exact there, and the result scales by 2^(y-1).
  void add(std::int32_t m, int w, std::int32_t yv, int y) {
    ++pairs;
    const ScalarProduct p = multiply_scalar_detail(m, w, yv, y);
    if (p.wrapped) {
      ++wraps;
      return;
    }
    const std::int64_t exact_num = static_cast<std::int64_t>(m) * yv;
    const std::int64_t scale = std::int64_t{1} << (y - 1);
    const std::int64_t err_num = std::llabs(static_cast<std::int64_t>(p.unwrapped) * scale - exact_num);
    if (err_num == 0) ++exact;
    max_err_num = std::max(max_err_num, err_num);
    abs_ulp.add(static_cast<double>(err_num) / static_cast<double>(scale));
    if (std::llabs(exact_num) >= scale) {
      rel.add(static_cast<double>(err_num) / static_cast<double>(std::llabs(exact_num)));
      ++rel_count;
    } else {
      ++excluded;
    }
  }
};

struct StepClassMeans {
  Rational loads;
  Rational adds;
  Rational shifts;
  Rational cycles;
};

const StepClassMeans& step_class_means(int y) {
  static std::map<int, StepClassMeans> cache;
  static std::mutex mu;
  const std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(y); it != cache.end()) return it->second;
  std::int64_t loads = 0, adds = 0, shifts = 0;
  const std::int64_t lo = QVal::min_bits(y), hi = QVal::max_bits(y);
  for (std::int64_t v = lo; v <= hi; ++v) {
    for (StepOp op : classify_steps(make_schedule(csd_encode(v, y)))) {
      switch (op) {
        case StepOp::kLoad: ++loads; break;
        case StepOp::kAdd:
        case StepOp::kSub: ++adds; break;
        case StepOp::kShift: ++shifts; break;
      }
    }
  }
  const std::int64_t n = hi - lo + 1;
  StepClassMeans m{Rational(loads, n), Rational(adds, n), Rational(shifts, n),
                   Rational(loads + adds + shifts, n)};
  return cache.emplace(y, m).first->second;
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ErrorReport exhaustive_error(int w, int y, std::uint64_t samples, std::uint64_t seed) {
  check_width(w);
  check_width(y);
  ErrorReport r;
  r.w = w;
  r.y = y;
  Accumulator acc;
  if (w <= 8 && y <= 8) {
    for (std::int32_t m = QVal::min_bits(w); m <= QVal::max_bits(w); ++m) {
      for (std::int32_t yv = QVal::min_bits(y); yv <= QVal::max_bits(y); ++yv) {
        acc.add(m, w, yv, y);
      }
    }
  } else {
    r.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int32_t> md(QVal::min_bits(w), QVal::max_bits(w));
    std::uniform_int_distribution<std::int32_t> yd(QVal::min_bits(y), QVal::max_bits(y));
    for (std::uint64_t i = 0; i < samples; ++i) {
      const auto m = md(rng);
      acc.add(m, w, yd(rng), y);
    }
  }
  r.pairs = acc.pairs;
  r.wrap_count = acc.wraps;
  r.exact_count = acc.exact;
  r.excluded_count = acc.excluded;
  r.mean_rel_err = acc.rel_count ? acc.rel.value() / static_cast<double>(acc.rel_count) : 0.0;
  const std::uint64_t kept = acc.pairs - acc.wraps;
  r.mean_abs_err_ulp = kept ? acc.abs_ulp.value() / static_cast<double>(kept) : 0.0;
  r.max_abs_err_ulp =
      static_cast<double>(acc.max_err_num) / static_cast<double>(std::int64_t{1} << (y - 1));
  return r;
}

DensityReport csd_density(int y) {
  check_width(y);
  std::int64_t zeros = 0;
  const std::int64_t lo = QVal::min_bits(y), hi = QVal::max_bits(y);
  for (std::int64_t v = lo; v <= hi; ++v) {
    const CsdCode c = csd_encode(v, y);
    zeros += c.width() - c.nonzero_count();
  }
  return {y, Rational(zeros, static_cast<std::int64_t>(y) * (hi - lo + 1))};
}

CycleStats cycles_per_multiply(int y) {
  check_width(y);
  CycleStats s;
  s.y = y;
  s.min = std::numeric_limits<int>::max();
  std::int64_t total = 0;
  const std::int64_t lo = QVal::min_bits(y), hi = QVal::max_bits(y);
  for (std::int64_t v = lo; v <= hi; ++v) {
    const int len = static_cast<int>(make_schedule(csd_encode(v, y)).steps.size());
    total += len;
    s.min = std::min(s.min, len);
    s.max = std::max(s.max, len);
  }
  s.mean = Rational(total, hi - lo + 1);
  return s;
}

std::vector<int> parse_baseline(const std::string& text) {
  std::vector<int> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    int v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || v <= 0 ||
        kDatapathBits % v != 0) {
      throw ConfigError("baseline width '" + std::string(tok) + "' must divide 48");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty baseline");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ComparisonRow> compare_hard_simd(std::span<const WorkloadItem> workload,
                                             std::span<const int> baseline,
                                             const CostModel& model) {
  std::vector<int> hard(baseline.begin(), baseline.end());
  std::sort(hard.begin(), hard.end());
  std::vector<ComparisonRow> rows;
  for (const auto& item : workload) {
    if (item.w < kMinWidth) throw WorkloadError("multiplicand width below 2");
    check_width(item.y);
    ComparisonRow row;
    row.item = item;

    const auto soft = std::find_if(kSupportedWidths.begin(), kSupportedWidths.end(),
                                   [&](int v) { return v >= item.w; });
    if (soft == kSupportedWidths.end()) {
      throw WorkloadError("multiplicand width " + std::to_string(item.w) +
                          " exceeds the widest Soft SIMD lane");
    }
    const auto hw = std::find_if(hard.begin(), hard.end(), [&](int v) { return v >= item.w; });
    if (hw == hard.end()) {
      throw WorkloadError("multiplicand width " + std::to_string(item.w) +
                          " exceeds the widest baseline lane");
    }
    row.soft_width = *soft;
    row.soft_lanes = kDatapathBits / row.soft_width;
    row.hard_width = *hw;
    row.hard_lanes = kDatapathBits / row.hard_width;

    const StepClassMeans& sm = step_class_means(item.y);
    row.soft_cycles_per_word = sm.cycles;
    row.soft_cycles_per_subword = sm.cycles / Rational(row.soft_lanes);
    const double soft_word_cost = model.weight("load") * to_double(sm.loads) +
                                  model.weight("add") * to_double(sm.adds) +
                                  model.weight("shift_stage") * to_double(sm.shifts);
    row.soft_cost_per_subword = soft_word_cost / row.soft_lanes;

    row.hard_cycles_per_subword = Rational(1, row.hard_lanes);
    row.hard_cost_per_subword = model.weight("multiply") / row.hard_lanes;

    row.cycle_ratio = row.soft_cycles_per_subword / row.hard_cycles_per_subword;
    if (row.hard_cost_per_subword > 0.0) {
      row.cost_ratio = row.soft_cost_per_subword / row.hard_cost_per_subword;
    } else {
      row.cost_ratio = row.soft_cost_per_subword > 0.0
                           ? std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::quiet_NaN();
    }

    row.subwords = item.words * static_cast<std::uint64_t>(row.soft_lanes);
    row.soft_total_cycles = sm.cycles * Rational(static_cast<std::int64_t>(item.words));
    const auto hl = static_cast<std::uint64_t>(row.hard_lanes);
    row.hard_total_cycles = (row.subwords + hl - 1) / hl;
    rows.push_back(row);
  }
  return rows;
}

std::string format_error_table(const ErrorReport& r) {
  std::ostringstream os;
  os << std::left;
  auto line = [&](const std::string& k, const std::string& v) {
    os << "  " << std::setw(18) << k << v << '\n';
  };
  os << "truncation error, multiplicand Q1." << (r.w - 1) << " x multiplier Q1." << (r.y - 1)
     << (r.sampled ? " (sampled)" : " (exhaustive)") << '\n';
  line("pairs", std::to_string(r.pairs));
  line("mean_rel_err", fixed(100.0 * r.mean_rel_err, 4) + " %");
  line("max_abs_err_ulp", fixed(r.max_abs_err_ulp, 6));
  line("mean_abs_err_ulp", fixed(r.mean_abs_err_ulp, 6));
  line("exact_count", std::to_string(r.exact_count));
  line("wrap_count", std::to_string(r.wrap_count));
  line("excluded_count", std::to_string(r.excluded_count));
  return os.str();
}

std::string format_error_record(const ErrorReport& r) {
  std::ostringstream os;
  os << "kind=error w=" << r.w << " y=" << r.y << " sampled=" << (r.sampled ? 1 : 0)
     << " pairs=" << r.pairs << " mean_rel_err=" << num(r.mean_rel_err)
     << " max_abs_err_ulp=" << num(r.max_abs_err_ulp)
     << " mean_abs_err_ulp=" << num(r.mean_abs_err_ulp) << " exact_count=" << r.exact_count
     << " wrap_count=" << r.wrap_count << " excluded_count=" << r.excluded_count << '\n';
  return os.str();
}

std::string format_comparison_table(std::span<const ComparisonRow> rows) {
  std::ostringstream os;
  os << std::right;
  os << std::setw(3) << "w" << std::setw(4) << "y" << std::setw(7) << "soft_w"
     << std::setw(7) << "lanes" << std::setw(13) << "soft_cyc/sw" << std::setw(7) << "hard_w"
     << std::setw(7) << "lanes" << std::setw(13) << "hard_cyc/sw" << std::setw(12)
     << "cyc_ratio" << std::setw(12) << "cost_ratio" << '\n';
  for (const auto& r : rows) {
    os << std::setw(3) << r.item.w << std::setw(4) << r.item.y << std::setw(7) << r.soft_width
       << std::setw(7) << r.soft_lanes << std::setw(13)
       << fixed(to_double(r.soft_cycles_per_subword), 4) << std::setw(7) << r.hard_width
       << std::setw(7) << r.hard_lanes << std::setw(13)
       << fixed(to_double(r.hard_cycles_per_subword), 4) << std::setw(12)
       << fixed(to_double(r.cycle_ratio), 4) << std::setw(12) << fixed(r.cost_ratio, 4)
       << '\n';
  }
  os << "weighted costs in " << CostModel::kUnitLabel << '\n';
  return os.str();
}

std::string format_comparison_records(std::span<const ComparisonRow> rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "kind=compare w=" << r.item.w << " y=" << r.item.y << " words=" << r.item.words
       << " soft_width=" << r.soft_width << " soft_lanes=" << r.soft_lanes
       << " soft_cycles_per_word=" << rational_to_string(r.soft_cycles_per_word)
       << " soft_cycles_per_subword=" << rational_to_string(r.soft_cycles_per_subword)
       << " soft_cost_per_subword=" << num(r.soft_cost_per_subword)
       << " hard_width=" << r.hard_width << " hard_lanes=" << r.hard_lanes
       << " hard_cycles_per_subword=" << rational_to_string(r.hard_cycles_per_subword)
       << " hard_cost_per_subword=" << num(r.hard_cost_per_subword)
       << " cycle_ratio=" << rational_to_string(r.cycle_ratio)
       << " cost_ratio=" << num(r.cost_ratio) << " subwords=" << r.subwords
       << " soft_total_cycles=" << rational_to_string(r.soft_total_cycles)
       << " hard_total_cycles=" << r.hard_total_cycles << '\n';
  }
  return os.str();
}

}  // namespace softsimd
