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

#include "softsimd/repack.hpp"

#include <algorithm>
#include <sstream>

#include "softsimd/error.hpp"

namespace softsimd {

const std::vector<RepackPair>& all_repack_pairs() {
  static const std::vector<RepackPair> pairs = [] {
    std::vector<RepackPair> out;
    for (int a : kSupportedWidths) {
      for (int b : kSupportedWidths) {
        if (a != b && (std::max(a, b) % std::min(a, b)) == 0) out.emplace_back(a, b);
      }
    }
    return out;
  }();
  return pairs;
}

namespace {

bool is_listed(int from_w, int to_w) {
  const auto& pairs = all_repack_pairs();
  return std::find(pairs.begin(), pairs.end(), RepackPair{from_w, to_w}) != pairs.end();
}

void require_pair(int from_w, int to_w) {
  if (from_w == to_w) {
    throw ConfigError("repack " + std::to_string(from_w) + "->" + std::to_string(to_w) +
                      ": identity conversions use bypass");
  }
  if (!is_listed(from_w, to_w)) {
    throw ConfigError("repack " + std::to_string(from_w) + "->" + std::to_string(to_w) +
                      " is not a supported conversion");
  }
}

}  // namespace

int repack_group_count(int from_w, int to_w) {
  require_pair(from_w, to_w);
  if (to_w > from_w) return to_w / from_w;
  return (from_w / to_w + 1) / 2;
}

bool RepackConfig::reads_r3() const noexcept {
  return std::any_of(mapping_.begin(), mapping_.end(),
                     [](const BitSource& s) { return s.reg == BitSource::Reg::kR3; });
}

std::string RepackConfig::dump() const {
  std::ostringstream os;
  for (int i = 0; i < kDatapathBits; ++i) {
    const BitSource& s = mapping_[static_cast<std::size_t>(i)];
    os << "out[" << i << "] <- ";
    switch (s.reg) {
      case BitSource::Reg::kZero: os << '0'; break;
      case BitSource::Reg::kR2: os << "R2[" << s.bit << ']'; break;
      case BitSource::Reg::kR3: os << "R3[" << s.bit << ']'; break;
    }
    os << '\n';
  }
  return os.str();
}

RepackConfig make_repack_config(int from_w, int to_w, int group,
                                const std::set<RepackPair>* enabled) {
  require_pair(from_w, to_w);
  if (enabled && !enabled->contains({from_w, to_w})) {
    throw ConfigError("repack " + std::to_string(from_w) + "->" + std::to_string(to_w) +
                      " is not enabled");
  }
  const int groups = repack_group_count(from_w, to_w);
  if (group < 0 || group >= groups) {
    throw ConfigError("repack group " + std::to_string(group) + " outside 0.." +
                      std::to_string(groups - 1));
  }

  RepackConfig cfg;
  cfg.from_w_ = from_w;
  cfg.to_w_ = to_w;
  cfg.group_ = group;
  const int lanes_out = kDatapathBits / to_w;

  if (to_w > from_w) {
    cfg.direction_ = RepackDirection::kWiden;
    cfg.ratio_ = to_w / from_w;
    const int pad = to_w - from_w;
    for (int k = 0; k < lanes_out; ++k) {
      const int src_lane = group * lanes_out + k;
      for (int b = 0; b < from_w; ++b) {
        cfg.mapping_[static_cast<std::size_t>(k * to_w + pad + b)] = {
            BitSource::Reg::kR2, src_lane * from_w + b};
      }
    }
  } else {
    cfg.direction_ = RepackDirection::kNarrow;
    cfg.ratio_ = from_w / to_w;
    const int lanes_in = kDatapathBits / from_w;
    const int drop = from_w - to_w;
    const int first = 2 * group * lanes_in;
    for (int slot = 0; slot < 2; ++slot) {
      const auto reg = slot == 0 ? BitSource::Reg::kR2 : BitSource::Reg::kR3;
      for (int src_lane = 0; src_lane < lanes_in; ++src_lane) {
        const int k = first + slot * lanes_in + src_lane;
        if (k >= lanes_out) break;
        for (int b = 0; b < to_w; ++b) {
          cfg.mapping_[static_cast<std::size_t>(k * to_w + b)] = {reg,
                                                                 src_lane * from_w + drop + b};
        }
      }
    }
  }
  return cfg;
}

PackedWord apply_repack(const RepackConfig& cfg, const PackedWord& r2, const PackedWord& r3) {
  if (r2.format().width() != cfg.from_w() || r3.format().width() != cfg.from_w()) {
    throw DomainError("apply_repack: inputs must have width " + std::to_string(cfg.from_w()));
  }
  std::uint64_t out = 0;
  for (int i = 0; i < kDatapathBits; ++i) {
    const BitSource& s = cfg.mapping()[static_cast<std::size_t>(i)];
    std::uint64_t b = 0;
    switch (s.reg) {
      case BitSource::Reg::kZero: break;
      case BitSource::Reg::kR2: b = (r2.raw() >> s.bit) & 1U; break;
      case BitSource::Reg::kR3: b = (r3.raw() >> s.bit) & 1U; break;
    }
    out |= b << i;
  }
  return PackedWord(out, SubwordFormat(cfg.to_w()));
}

PackedWord bypass(const PackedWord& r2) { return r2; }

std::vector<PackedWord> widen_word(const PackedWord& word, int to_w) {
  const int from_w = word.format().width();
  const int groups = repack_group_count(from_w, to_w);
  if (to_w < from_w) throw ConfigError("widen_word: target narrower than source");
  std::vector<PackedWord> out;
  for (int g = 0; g < groups; ++g) {
    out.push_back(apply_repack(make_repack_config(from_w, to_w, g), word, word));
  }
  return out;
}

PackedWord narrow_words(std::span<const PackedWord> words, int to_w) {
  if (words.empty()) throw DomainError("narrow_words: no input words");
  const int from_w = words.front().format().width();
  if (to_w > from_w) throw ConfigError("narrow_words: target wider than source");
  const int ratio = from_w / to_w;
  if (static_cast<int>(words.size()) != ratio) {
    throw DomainError("narrow_words: expected " + std::to_string(ratio) + " words");
  }
  const int groups = repack_group_count(from_w, to_w);
  std::uint64_t raw = 0;
  for (int g = 0; g < groups; ++g) {
    const auto cfg = make_repack_config(from_w, to_w, g);
    const PackedWord& r2 = words[static_cast<std::size_t>(2 * g)];
    const std::size_t i3 = static_cast<std::size_t>(2 * g + 1);
    const PackedWord& r3 = i3 < words.size() ? words[i3] : PackedWord::zero(r2.format());
    raw |= apply_repack(cfg, r2, r3).raw();
  }
  return PackedWord(raw, SubwordFormat(to_w));
}

}  // namespace softsimd
