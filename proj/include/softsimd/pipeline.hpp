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

// The two-stage machine. Stage 1 (SETFMT, LDW, MULCSD) owns R1 and writes
// R2/R3; Stage 2 (REPACK, BYPASS, STW) reads R2/R3 and owns R4 and the
// output stream. Each stage issues its own instructions in program order and
// the stages run concurrently, subject to register dependencies: a reader
// waits for the writer to finish, and a writer may not start before the
// last reader of the register it overwrites.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softsimd/program.hpp"
#include "softsimd/word.hpp"

namespace softsimd {

struct EventCounters {
  std::uint64_t adds = 0;        // additions and subtractions
  std::uint64_t loads = 0;
  std::uint64_t shift_only = 0;  // multiply steps with digit 0
  std::array<std::uint64_t, 4> shifts_by{};  // index = sigma; [0] unused
  std::uint64_t repacks = 0;
  std::uint64_t bypasses = 0;
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;

  std::uint64_t total_shift_bits() const noexcept {
    return shifts_by[1] + 2 * shifts_by[2] + 3 * shifts_by[3];
  }
  friend bool operator==(const EventCounters&, const EventCounters&) = default;
};

struct PipelineState {
  std::array<std::optional<PackedWord>, 4> regs;  // R1..R4
  std::optional<SubwordFormat> fmt;
  std::uint64_t cycle = 0;
  // Cycles the same program would take with the stages serialized.
  std::uint64_t serial_cycles = 0;
  EventCounters events;

  const std::optional<PackedWord>& reg(Reg r) const { return regs[static_cast<std::size_t>(r)]; }
};

// Start cycle and length of every instruction under the overlapped model.
struct InstructionTiming {
  int stage = 1;
  std::uint64_t start = 0;
  std::uint64_t cost = 0;
  std::uint64_t end() const noexcept { return start + cost; }
};

std::uint64_t instruction_cost(const Instruction& ins);
std::vector<InstructionTiming> schedule_program(const MicroProgram& program);

struct RunResult {
  std::vector<PackedWord> output;
  PipelineState final;
};

// Validates, then executes cycle by cycle. Throws StreamError if LDW runs
// out of input. When trace is non-null one record per cycle is appended:
// `cycle=<n> s1=<activity> s2=<activity> r1=<hex> r2=<hex> r3=<hex> r4=<hex>`
// with register values as of the end of that cycle.
RunResult run(const MicroProgram& program, std::span<const std::uint64_t> input,
              std::vector<std::string>* trace = nullptr);

std::vector<std::string> trace(const MicroProgram& program, std::span<const std::uint64_t> input);

}  // namespace softsimd
