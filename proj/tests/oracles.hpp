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

// Test-only reference models. Nothing here may call into the bit-level
// datapath it is used to check.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "softsimd/mul.hpp"
#include "softsimd/pipeline.hpp"
#include "softsimd/program.hpp"
#include "softsimd/repack.hpp"
#include "softsimd/word.hpp"

namespace softsimd::oracle {

inline std::int64_t wrap(std::int64_t v, int w) {
  const std::int64_t span = std::int64_t{1} << w;
  const std::int64_t lo = -(span / 2);
  return ((v - lo) % span + span) % span + lo;
}

inline std::int64_t floor_shift(std::int64_t v, int s) {
  // Floor division by 2^s without relying on >> of negatives.
  const std::int64_t d = std::int64_t{1} << s;
  std::int64_t q = v / d;
  if (v % d != 0 && v < 0) --q;
  return q;
}

// Lane values straight from the raw bits, without extract_lane.
inline std::vector<std::int64_t> lanes(std::uint64_t raw, int w) {
  std::vector<std::int64_t> out;
  for (int k = 0; k < 48 / w; ++k) {
    std::int64_t v = static_cast<std::int64_t>((raw >> (k * w)) & ((std::uint64_t{1} << w) - 1));
    if (v >= (std::int64_t{1} << (w - 1))) v -= std::int64_t{1} << w;
    out.push_back(v);
  }
  return out;
}

inline std::uint64_t from_lanes(const std::vector<std::int64_t>& v, int w) {
  std::uint64_t raw = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    raw |= (static_cast<std::uint64_t>(v[k]) & ((std::uint64_t{1} << w) - 1)) << (k * w);
  }
  return raw;
}

inline std::uint64_t padd(std::uint64_t a, std::uint64_t b, int w, bool sub) {
  auto x = lanes(a, w), y = lanes(b, w);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = wrap(sub ? x[k] - y[k] : x[k] + y[k], w);
  return from_lanes(x, w);
}

inline std::uint64_t pshift(std::uint64_t a, int w, int sigma) {
  auto x = lanes(a, w);
  for (auto& v : x) v = floor_shift(v, sigma);
  return from_lanes(x, w);
}

inline std::uint64_t fused(std::uint64_t acc, std::uint64_t m, int w, int d, int sigma) {
  auto x = lanes(acc, w), y = lanes(m, w);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const std::int64_t s = x[k] + d * y[k];
    x[k] = sigma == 0 ? wrap(s, w) : floor_shift(s, sigma);
  }
  return from_lanes(x, w);
}

// All canonical digit vectors of width y whose value fits y-bit two's
// complement, grouped by value. Enumerates 3^y candidates.
inline std::map<std::int64_t, std::vector<std::vector<std::int8_t>>> enumerate_canonical(int y) {
  std::map<std::int64_t, std::vector<std::vector<std::int8_t>>> out;
  std::vector<std::int8_t> d(static_cast<std::size_t>(y), -1);
  const std::int64_t lo = -(std::int64_t{1} << (y - 1));
  const std::int64_t hi = (std::int64_t{1} << (y - 1)) - 1;
  while (true) {
    bool canonical = true;
    for (int j = 0; j + 1 < y; ++j) {
      if (d[static_cast<std::size_t>(j)] && d[static_cast<std::size_t>(j + 1)]) canonical = false;
    }
    if (canonical) {
      std::int64_t v = 0;
      for (int j = 0; j < y; ++j) v += d[static_cast<std::size_t>(j)] * (std::int64_t{1} << j);
      if (v >= lo && v <= hi) out[v].push_back(d);
    }
    int j = 0;
    while (j < y && d[static_cast<std::size_t>(j)] == 1) d[static_cast<std::size_t>(j++)] = -1;
    if (j == y) break;
    ++d[static_cast<std::size_t>(j)];
  }
  return out;
}

// Executes a program in program order, one module operation per
// instruction, with no notion of cycles or stages.
inline std::vector<PackedWord> compose(const MicroProgram& prog,
                                       std::span<const std::uint64_t> input) {
  std::vector<PackedWord> out;
  std::optional<SubwordFormat> fmt;
  std::optional<PackedWord> r1, r2, r3, r4;
  std::size_t pos = 0;
  for (const auto& ins : prog.instructions) {
    if (const auto* s = std::get_if<instr::SetFmt>(&ins)) {
      fmt = SubwordFormat(s->width);
    } else if (std::holds_alternative<instr::LoadWord>(ins)) {
      r1 = PackedWord(input[pos++], *fmt);
    } else if (const auto* m = std::get_if<instr::MulCsd>(&ins)) {
      auto p = multiply_packed(*r1, csd_encode(m->value, m->width)).product;
      (m->target == Reg::kR2 ? r2 : r3) = p;
    } else if (const auto* r = std::get_if<instr::Repack>(&ins)) {
      const auto cfg = make_repack_config(r->from_w, r->to_w, r->group);
      auto p = apply_repack(cfg, *r2, cfg.reads_r3() ? *r3 : *r2);
      if (cfg.merges_into_output()) p = PackedWord(p.raw() | r4->raw(), p.format());
      r4 = p;
    } else if (std::holds_alternative<instr::Bypass>(ins)) {
      r4 = bypass(*r2);
    } else {
      out.push_back(*r4);
    }
  }
  return out;
}

struct RandomProgram {
  MicroProgram program;
  std::vector<std::uint64_t> input;
};

// Draws a well-formed program: batches of loads and multiplies followed by
// either a bypass or a full repack conversion, then stores.
inline RandomProgram random_program(std::mt19937_64& rng, int batches) {
  RandomProgram rp;
  auto& ins = rp.program.instructions;
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  auto rand_mul = [&](Reg target) {
    const int y = 2 + pick(15);
    const std::int64_t lo = -(std::int64_t{1} << (y - 1));
    const std::int64_t v = lo + static_cast<std::int64_t>(rng() % (std::uint64_t{1} << y));
    ins.push_back(instr::MulCsd{v, y, target});
  };
  for (int b = 0; b < batches; ++b) {
    const int w = kSupportedWidths[static_cast<std::size_t>(pick(5))];
    ins.push_back(instr::SetFmt{w});
    std::vector<RepackPair> pairs;
    for (const auto& p : all_repack_pairs()) {
      if (p.first == w) pairs.push_back(p);
    }
    const int mode = pairs.empty() ? 0 : pick(3);
    if (mode == 0) {
      ins.push_back(instr::LoadWord{});
      rp.input.push_back(rng() & kDatapathMask);
      rand_mul(pick(2) ? Reg::kR2 : Reg::kR3);
      // Make sure R2 holds this batch's product.
      if (std::get<instr::MulCsd>(ins.back()).target == Reg::kR3) rand_mul(Reg::kR2);
      ins.push_back(instr::Bypass{});
      ins.push_back(instr::StoreWord{});
      continue;
    }
    const auto [from_w, to_w] = pairs[static_cast<std::size_t>(pick(static_cast<int>(pairs.size())))];
    const int groups = repack_group_count(from_w, to_w);
    for (int g = 0; g < groups; ++g) {
      const auto cfg = make_repack_config(from_w, to_w, g);
      ins.push_back(instr::LoadWord{});
      rp.input.push_back(rng() & kDatapathMask);
      rand_mul(Reg::kR2);
      if (cfg.reads_r3()) {
        ins.push_back(instr::LoadWord{});
        rp.input.push_back(rng() & kDatapathMask);
        rand_mul(Reg::kR3);
      }
      ins.push_back(instr::Repack{from_w, to_w, g});
      // Widening produces a finished word per group; narrowing only after
      // the last group has merged.
      if (to_w > from_w || g + 1 == groups) ins.push_back(instr::StoreWord{});
    }
  }
  return rp;
}

}  // namespace softsimd::oracle
