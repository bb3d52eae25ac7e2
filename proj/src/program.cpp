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

#include "softsimd/program.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "softsimd/csd.hpp"
#include "softsimd/error.hpp"
#include "softsimd/fxp.hpp"
#include "softsimd/repack.hpp"
#include "softsimd/word.hpp"

namespace softsimd {

const char* to_string(Reg r) noexcept {
  switch (r) {
    case Reg::kR1: return "R1";
    case Reg::kR2: return "R2";
    case Reg::kR3: return "R3";
    case Reg::kR4: return "R4";
  }
  return "?";
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) return std::nullopt;
  return v;
}

}  // namespace

std::string to_string(const Instruction& ins) {
  return std::visit(
      Overloaded{
          [](const instr::SetFmt& i) { return "SETFMT " + std::to_string(i.width); },
          [](const instr::LoadWord&) { return std::string("LDW"); },
          [](const instr::MulCsd& i) {
            return "MULCSD " + std::to_string(i.value) + ' ' + std::to_string(i.width) + ' ' +
                   to_string(i.target);
          },
          [](const instr::Repack& i) {
            return "REPACK " + std::to_string(i.from_w) + ' ' + std::to_string(i.to_w) + ' ' +
                   std::to_string(i.group);
          },
          [](const instr::Bypass&) { return std::string("BYPASS"); },
          [](const instr::StoreWord&) { return std::string("STW"); },
      },
      ins);
}

std::string MicroProgram::to_text() const {
  std::string out;
  for (const auto& ins : instructions) {
    out += to_string(ins);
    out.push_back('\n');
  }
  return out;
}

MicroProgram parse_program(std::string_view text) {
  MicroProgram prog;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    const std::size_t index = prog.instructions.size();
    auto fail = [&](const std::string& msg) -> ProgramError {
      return ProgramError(index, "line " + std::to_string(line_no) + ": " + msg);
    };
    auto arg = [&](std::size_t k, const char* what) -> std::int64_t {
      if (k >= tok.size()) throw fail(std::string("missing ") + what);
      const auto v = parse_int(tok[k]);
      if (!v) throw fail(std::string("malformed ") + what + " '" + std::string(tok[k]) + "'");
      return *v;
    };
    auto require_arity = [&](std::size_t lo, std::size_t hi) {
      if (tok.size() - 1 < lo || tok.size() - 1 > hi) {
        throw fail("wrong number of operands for " + std::string(tok[0]));
      }
    };

    const std::string op = upper(tok[0]);
    if (op == "SETFMT") {
      require_arity(1, 1);
      prog.instructions.push_back(instr::SetFmt{static_cast<int>(arg(1, "width"))});
    } else if (op == "LDW") {
      require_arity(0, 0);
      prog.instructions.push_back(instr::LoadWord{});
    } else if (op == "MULCSD") {
      require_arity(2, 3);
      instr::MulCsd m{arg(1, "value"), static_cast<int>(arg(2, "width")), Reg::kR2};
      if (tok.size() == 4) {
        const std::string r = upper(tok[3]);
        if (r == "R2") {
          m.target = Reg::kR2;
        } else if (r == "R3") {
          m.target = Reg::kR3;
        } else {
          throw fail("MULCSD target must be R2 or R3");
        }
      }
      prog.instructions.push_back(m);
    } else if (op == "REPACK") {
      require_arity(2, 3);
      instr::Repack r{static_cast<int>(arg(1, "source width")),
                      static_cast<int>(arg(2, "target width")), 0};
      if (tok.size() == 4) r.group = static_cast<int>(arg(3, "group"));
      prog.instructions.push_back(r);
    } else if (op == "BYPASS") {
      require_arity(0, 0);
      prog.instructions.push_back(instr::Bypass{});
    } else if (op == "STW") {
      require_arity(0, 0);
      prog.instructions.push_back(instr::StoreWord{});
    } else {
      throw fail("unknown mnemonic '" + std::string(tok[0]) + "'");
    }
  }
  return prog;
}

void validate(const MicroProgram& program) {
  // Width of the value each register will hold at this point of the program.
  std::optional<int> fmt;
  std::array<std::optional<int>, 4> reg{};
  auto at = [&](Reg r) -> std::optional<int>& { return reg[static_cast<std::size_t>(r)]; };

  for (std::size_t i = 0; i < program.instructions.size(); ++i) {
    auto fail = [i](const std::string& msg) { return ProgramError(i, msg); };
    std::visit(
        Overloaded{
            [&](const instr::SetFmt& s) {
              if (!SubwordFormat::is_supported(s.width)) {
                throw fail("SETFMT " + std::to_string(s.width) + ": unsupported width");
              }
              fmt = s.width;
            },
            [&](const instr::LoadWord&) {
              if (!fmt) throw fail("LDW before SETFMT");
              at(Reg::kR1) = fmt;
            },
            [&](const instr::MulCsd& m) {
              if (!at(Reg::kR1)) throw fail("MULCSD before any LDW");
              if (m.target != Reg::kR2 && m.target != Reg::kR3) {
                throw fail("MULCSD target must be R2 or R3");
              }
              try {
                (void)csd_encode(m.value, m.width);
              } catch (const DomainError&) {
                throw fail("MULCSD operand " + std::to_string(m.value) + " does not fit " +
                           std::to_string(m.width) + " bits");
              }
              at(m.target) = at(Reg::kR1);
            },
            [&](const instr::Repack& r) {
              std::optional<RepackConfig> cfg;
              try {
                cfg = make_repack_config(r.from_w, r.to_w, r.group);
              } catch (const ConfigError& e) {
                throw fail(e.what());
              }
              if (at(Reg::kR2) != r.from_w) {
                throw fail("REPACK source R2 does not hold " + std::to_string(r.from_w) +
                           "-bit lanes");
              }
              if (cfg->reads_r3() && at(Reg::kR3) != r.from_w) {
                throw fail("REPACK source R3 does not hold " + std::to_string(r.from_w) +
                           "-bit lanes");
              }
              if (cfg->merges_into_output() && at(Reg::kR4) != r.to_w) {
                throw fail("REPACK group " + std::to_string(r.group) +
                           " merges into R4, which does not hold " + std::to_string(r.to_w) +
                           "-bit lanes");
              }
              at(Reg::kR4) = r.to_w;
            },
            [&](const instr::Bypass&) {
              if (!at(Reg::kR2)) throw fail("BYPASS before R2 is written");
              at(Reg::kR4) = at(Reg::kR2);
            },
            [&](const instr::StoreWord&) {
              if (!at(Reg::kR4)) throw fail("STW before R4 is written");
            },
        },
        program.instructions[i]);
  }
}

}  // namespace softsimd
