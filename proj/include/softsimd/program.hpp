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

// Microprograms driving the two-stage pipeline. Text form: one instruction
// per line, `#` starts a comment, mnemonics are case-insensitive.
//
//   SETFMT <w>
//   LDW
//   MULCSD <value> <width> [R2|R3]
//   REPACK <from_w> <to_w> [<group>]
//   BYPASS
//   STW

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace softsimd {

enum class Reg : std::uint8_t { kR1, kR2, kR3, kR4 };

const char* to_string(Reg r) noexcept;

namespace instr {

struct SetFmt {
  int width = 0;
  friend bool operator==(const SetFmt&, const SetFmt&) = default;
};
struct LoadWord {
  friend bool operator==(const LoadWord&, const LoadWord&) = default;
};
struct MulCsd {
  std::int64_t value = 0;
  int width = 0;
  Reg target = Reg::kR2;
  friend bool operator==(const MulCsd&, const MulCsd&) = default;
};
struct Repack {
  int from_w = 0;
  int to_w = 0;
  int group = 0;
  friend bool operator==(const Repack&, const Repack&) = default;
};
struct Bypass {
  friend bool operator==(const Bypass&, const Bypass&) = default;
};
struct StoreWord {
  friend bool operator==(const StoreWord&, const StoreWord&) = default;
};

}  // namespace instr

using Instruction = std::variant<instr::SetFmt, instr::LoadWord, instr::MulCsd, instr::Repack,
                                 instr::Bypass, instr::StoreWord>;

std::string to_string(const Instruction& ins);

struct MicroProgram {
  std::vector<Instruction> instructions;

  std::string to_text() const;
  friend bool operator==(const MicroProgram&, const MicroProgram&) = default;
};

// Throws ProgramError naming the instruction index (and source line).
MicroProgram parse_program(std::string_view text);

// Static checks: formats declared before loads, registers written before
// they are read, repack inputs in the conversion's source format.
void validate(const MicroProgram& program);

}  // namespace softsimd
