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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "softsimd/analysis.hpp"
#include "softsimd/csd.hpp"
#include "softsimd/mul.hpp"
#include "softsimd/pipeline.hpp"
#include "softsimd/repack.hpp"
#include "softsimd/word.hpp"

namespace softsimd {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

// Multiplies every (m, y) lane pair through the packed datapath and
// compares each lane against the scalar recurrence.
std::uint64_t packed_vs_scalar_mismatches(int w, int y, const std::vector<std::int32_t>& ms,
                                          const std::vector<std::int32_t>& ys) {
  const SubwordFormat fmt(w);
  const auto lanes = static_cast<std::size_t>(fmt.lanes());
  std::uint64_t bad = 0;
  std::vector<std::int32_t> batch;
  for (std::size_t i = 0; i < ms.size(); i += lanes) {
    // Consecutive cases share a multiplier only if ys repeats; group by y.
    const std::int32_t yv = ys[i];
    batch.assign(lanes, 0);
    std::size_t n = 0;
    for (; n < lanes && i + n < ms.size() && ys[i + n] == yv; ++n) batch[n] = ms[i + n];
    const auto out = lanes_of(multiply_packed(pack_bits(batch, fmt), csd_encode(yv, y)).product);
    for (std::size_t k = 0; k < n; ++k) {
      if (out[k] != multiply_scalar_oracle(batch[k], w, yv, y)) ++bad;
    }
    i -= lanes - n;  // resume at the first case not consumed
  }
  return bad;
}

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t bad = 0;
  std::uint64_t cases = 0;
  for (int w : {8, 4}) {
    std::vector<std::int32_t> ms, ys;
    for (std::int32_t y = QVal::min_bits(w); y <= QVal::max_bits(w); ++y) {
      for (std::int32_t m = QVal::min_bits(w); m <= QVal::max_bits(w); ++m) {
        ms.push_back(m);
        ys.push_back(y);
      }
    }
    cases += ms.size();
    bad += packed_vs_scalar_mismatches(w, w, ms, ys);
  }
  std::mt19937_64 rng(0xacce97);
  for (int w : {12, 16}) {
    const SubwordFormat fmt(w);
    std::uint64_t done = 0;
    while (done < 1'000'000) {
      const std::int32_t yv =
          QVal::min_bits(w) + static_cast<std::int32_t>(rng() % (std::uint64_t{1} << w));
      const PackedWord m(rng() & kDatapathMask, fmt);
      const auto out = lanes_of(multiply_packed(m, csd_encode(yv, w)).product);
      const auto in = lanes_of(m);
      for (std::size_t k = 0; k < in.size(); ++k) {
        if (out[k] != multiply_scalar_oracle(in[k], w, yv, w)) ++bad;
      }
      done += in.size();
    }
    cases += done;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {bad == 0 && secs < 60.0, std::to_string(cases) + " cases, " + std::to_string(bad) +
                                       " mismatches, " + std::to_string(secs) + " s"};
}

Outcome truncation_claim() {
  const auto r = exhaustive_error(8, 8);
  const bool ok = !r.sampled && r.mean_rel_err >= 0.002 && r.mean_rel_err <= 0.05 &&
                  r.max_abs_err_ulp < 2.0;
  return {ok, "mean_rel_err=" + std::to_string(r.mean_rel_err) +
                  " max_abs_err_ulp=" + std::to_string(r.max_abs_err_ulp) +
                  " wraps=" + std::to_string(r.wrap_count)};
}

Outcome csd_density_claim() {
  const double d12 = csd_density(12).value();
  bool ok = d12 >= 0.63 && d12 <= 0.70;
  std::string detail = "density(12)=" + std::to_string(d12) + " gaps:";
  double prev = INFINITY;
  for (int y : {4, 6, 8, 10, 12}) {
    const double gap = std::abs(csd_density(y).value() - 2.0 / 3.0);
    ok = ok && gap < prev;
    prev = gap;
    detail += " " + std::to_string(gap);
  }
  return {ok, detail};
}

Outcome figure3() {
  const CsdCode code = csd_encode(0b01110011, 8);
  const Schedule s = make_schedule(code);
  const ScheduleStats st = schedule_stats(code);
  bool ok = s.steps.size() == 4 && st.adds == 3 && s.total_shift() == 7;
  for (const auto& step : s.steps) ok = ok && step.shift <= 3;
  const SubwordFormat fmt(8);
  const auto m = pack_bits(std::vector<std::int32_t>(6, -128), fmt);
  const auto r = multiply_packed(m, code);
  for (int k = 0; k < fmt.lanes(); ++k) {
    ok = ok && to_real(extract_lane(r.product, k)) == Rational(-115, 128);
  }
  ok = ok && r.trace.adds == 3 && r.trace.cycles == 4;
  return {ok, "csd=" + code.to_string() + " steps=" + std::to_string(s.steps.size()) +
                  " adds=" + std::to_string(st.adds) +
                  " lane0=" + std::to_string(extract_lane(r.product, 0).bits()) + "/128"};
}

Outcome lane_isolation() {
  std::mt19937_64 rng(0x150);
  std::uint64_t violations = 0;
  constexpr std::uint64_t kOps = 1'000'000;
  for (int w : kSupportedWidths) {
    const SubwordFormat fmt(w);
    for (std::uint64_t i = 0; i < kOps; ++i) {
      const std::uint64_t ra = rng() & kDatapathMask, rb = rng() & kDatapathMask;
      const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(fmt.lanes()));
      const std::uint64_t lane = ((std::uint64_t{1} << w) - 1) << (k * w);
      const std::uint64_t ra2 = (ra & ~lane) | (rng() & lane);
      const std::uint64_t rb2 = (rb & ~lane) | (rng() & lane);
      const PackedWord a(ra, fmt), b(rb, fmt), a2(ra2, fmt), b2(rb2, fmt);
      std::uint64_t x = 0, y = 0;
      switch (i % 4) {
        case 0: {
          const bool sub = rng() & 1;
          x = padd(a, b, sub).raw();
          y = padd(a2, b2, sub).raw();
          break;
        }
        case 1: {
          const int s = 1 + static_cast<int>(rng() % 3);
          x = pshift(a, s).raw();
          y = pshift(a2, s).raw();
          break;
        }
        default: {
          const int d = static_cast<int>(rng() % 3) - 1;
          const int s = static_cast<int>(rng() % 4);
          x = fused_step(a, b, d, s).raw();
          y = fused_step(a2, b2, d, s).raw();
          break;
        }
      }
      if ((x & ~lane) != (y & ~lane)) ++violations;
    }
  }
  return {violations == 0, std::to_string(kOps) + " ops per format, " +
                               std::to_string(violations) + " violations"};
}

Outcome zero_skipping() {
  const auto c = cycles_per_multiply(8);
  const bool ok = c.mean < Rational(7) && c.mean >= Rational(3) && c.mean == Rational(953, 256);
  return {ok, "mean=" + rational_to_string(c.mean) + " min=" + std::to_string(c.min) +
                  " max=" + std::to_string(c.max)};
}

Outcome repack_correctness() {
  std::uint64_t bad = 0;
  std::uint64_t checked = 0;
  auto round_trip = [&](const PackedWord& x, int to_w) {
    ++checked;
    const auto wide = widen_word(x, to_w);
    const int per = kDatapathBits / to_w;
    for (std::size_t g = 0; g < wide.size(); ++g) {
      for (int k = 0; k < per; ++k) {
        if (to_real(extract_lane(wide[g], k)) !=
            to_real(extract_lane(x, static_cast<int>(g) * per + k))) {
          ++bad;
        }
      }
    }
    if (narrow_words(wide, x.format().width()) != x) ++bad;
  };
  // 4 <-> 8: every value in every lane, against random backgrounds.
  std::mt19937_64 rng(0x4e9);
  for (int lane = 0; lane < 12; ++lane) {
    for (std::uint64_t v = 0; v < 16; ++v) {
      const std::uint64_t hole = ~(std::uint64_t{0xF} << (4 * lane));
      round_trip(PackedWord(((rng() & kDatapathMask) & hole) | (v << (4 * lane)), SubwordFormat(4)), 8);
    }
  }
  for (const auto& [from_w, to_w] : all_repack_pairs()) {
    if (to_w < from_w) {
      // Narrowing against the floor-to-coarser-grid oracle.
      const int ratio = from_w / to_w;
      for (int i = 0; i < 2000; ++i) {
        std::vector<PackedWord> in;
        for (int r = 0; r < ratio; ++r) in.emplace_back(rng() & kDatapathMask, SubwordFormat(from_w));
        const auto out = narrow_words(in, to_w);
        const int per = kDatapathBits / from_w;
        for (int r = 0; r < ratio; ++r) {
          const auto src = oracle::lanes(in[static_cast<std::size_t>(r)].raw(), from_w);
          for (int k = 0; k < per; ++k) {
            ++checked;
            if (extract_lane(out, r * per + k).bits() !=
                oracle::floor_shift(src[static_cast<std::size_t>(k)], from_w - to_w)) {
              ++bad;
            }
          }
        }
      }
      continue;
    }
    for (int i = 0; i < 10000; ++i) round_trip(PackedWord(rng() & kDatapathMask, SubwordFormat(from_w)), to_w);
  }
  return {bad == 0, std::to_string(checked) + " checks, " + std::to_string(bad) + " failures"};
}

Outcome hard_simd_discontinuity() {
  const std::vector<WorkloadItem> wl = {{8, 8, 1}, {9, 8, 1}};
  const auto two = compare_hard_simd(wl, parse_baseline("8,16"), CostModel{});
  const auto five = compare_hard_simd(wl, parse_baseline("4,6,8,12,16"), CostModel{});
  const Rational jump_two = two[1].hard_cycles_per_subword / two[0].hard_cycles_per_subword;
  const Rational jump_five = five[1].hard_cycles_per_subword / five[0].hard_cycles_per_subword;
  const bool ok = jump_two == Rational(2) && jump_five == Rational(3, 2) &&
                  two[1].hard_width == 16 && five[1].hard_width == 12;
  return {ok, "{8,16}: x" + rational_to_string(jump_two) + " (lanes " +
                  std::to_string(two[0].hard_lanes) + "->" + std::to_string(two[1].hard_lanes) +
                  "), {4,6,8,12,16}: x" + rational_to_string(jump_five) + " (lanes " +
                  std::to_string(five[0].hard_lanes) + "->" + std::to_string(five[1].hard_lanes) +
                  ")"};
}

Outcome pipeline_equivalence() {
  std::mt19937_64 rng(0x919e);
  int bad_output = 0, bad_trace = 0, bad_events = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto rp = oracle::random_program(rng, 1 + static_cast<int>(rng() % 6));
    std::vector<std::string> t1, t2;
    const auto r1 = run(rp.program, rp.input, &t1);
    const auto r2 = run(parse_program(rp.program.to_text()), rp.input, &t2);
    if (r1.output != oracle::compose(rp.program, rp.input)) ++bad_output;
    if (t1 != t2 || r1.output != r2.output || r1.final.events != r2.final.events) ++bad_trace;
    std::uint64_t adds = 0, shift = 0;
    for (const auto& ins : rp.program.instructions) {
      if (const auto* m = std::get_if<instr::MulCsd>(&ins)) {
        adds += static_cast<std::uint64_t>(std::max(0, csd_encode(m->value, m->width).nonzero_count() - 1));
        shift += static_cast<std::uint64_t>(m->width - 1);
      }
    }
    if (r1.final.events.adds != adds || r1.final.events.total_shift_bits() != shift) ++bad_events;
  }
  return {bad_output == 0 && bad_trace == 0 && bad_events == 0,
          "1000 programs, output mismatches " + std::to_string(bad_output) + ", trace mismatches " +
              std::to_string(bad_trace) + ", event mismatches " + std::to_string(bad_events)};
}

}  // namespace
}  // namespace softsimd

int main() {
  using namespace softsimd;
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"1 oracle equivalence (8x8, 4x4 exhaustive; 12x12, 16x16 1e6 random)", oracle_equivalence},
      {"2 truncation error 8x8: mean_rel_err in [0.2%, 5%], max < 2 ulp", truncation_claim},
      {"3 CSD zero density near 2/3 and converging", csd_density_claim},
      {"4 multiplier 01110011: 4 steps, 3 additions, x(-1.0) = -115/128", figure3},
      {"5 lane isolation, 1e6 perturbations per format", lane_isolation},
      {"6 zero skipping: mean cycles(8) in [3, 7)", zero_skipping},
      {"7 repack round trip, value preservation, floor narrowing", repack_correctness},
      {"8 Hard SIMD lane discontinuity between 8 and 9 bits", hard_simd_discontinuity},
      {"9 pipeline composition, replay determinism, event conservation", pipeline_equivalence},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s -- %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
