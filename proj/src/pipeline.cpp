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

#include "softsimd/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "softsimd/csd.hpp"
#include "softsimd/error.hpp"
#include "softsimd/mul.hpp"
#include "softsimd/repack.hpp"

namespace softsimd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::size_t idx(Reg r) { return static_cast<std::size_t>(r); }

struct Access {
  int stage = 1;
  std::vector<Reg> reads;
  std::vector<Reg> writes;
};

Access access_of(const Instruction& ins) {
  return std::visit(
      Overloaded{
          [](const instr::SetFmt&) { return Access{1, {}, {}}; },
          [](const instr::LoadWord&) { return Access{1, {}, {Reg::kR1}}; },
          [](const instr::MulCsd& m) { return Access{1, {Reg::kR1}, {m.target}}; },
          [](const instr::Repack& r) {
            const auto cfg = make_repack_config(r.from_w, r.to_w, r.group);
            Access a{2, {Reg::kR2}, {Reg::kR4}};
            if (cfg.reads_r3()) a.reads.push_back(Reg::kR3);
            if (cfg.merges_into_output()) a.reads.push_back(Reg::kR4);
            return a;
          },
          [](const instr::Bypass&) { return Access{2, {Reg::kR2}, {Reg::kR4}}; },
          [](const instr::StoreWord&) { return Access{2, {Reg::kR4}, {}}; },
      },
      ins);
}

std::string hex_or_zero(const std::optional<PackedWord>& w) {
  return w ? to_hex(*w) : std::string(12, '0');
}

}  // namespace

std::uint64_t instruction_cost(const Instruction& ins) {
  if (const auto* m = std::get_if<instr::MulCsd>(&ins)) {
    return make_schedule(csd_encode(m->value, m->width)).steps.size();
  }
  return 1;
}

std::vector<InstructionTiming> schedule_program(const MicroProgram& program) {
  std::array<std::uint64_t, 3> stage_free{};
  std::array<std::uint64_t, 4> last_write_end{};
  std::array<std::uint64_t, 4> last_read_end{};

  std::vector<InstructionTiming> timing;
  timing.reserve(program.instructions.size());
  for (const auto& ins : program.instructions) {
    const Access acc = access_of(ins);
    InstructionTiming t;
    t.stage = acc.stage;
    t.cost = instruction_cost(ins);
    t.start = stage_free[static_cast<std::size_t>(acc.stage)];
    for (Reg r : acc.reads) t.start = std::max(t.start, last_write_end[idx(r)]);
    // The first write lands at the end of the writer's first cycle, so it
    // may share its first cycle with the last cycle of a pending reader.
    for (Reg r : acc.writes) {
      if (last_read_end[idx(r)] > 0) t.start = std::max(t.start, last_read_end[idx(r)] - 1);
    }
    stage_free[static_cast<std::size_t>(acc.stage)] = t.end();
    for (Reg r : acc.reads) last_read_end[idx(r)] = std::max(last_read_end[idx(r)], t.end());
    for (Reg r : acc.writes) last_write_end[idx(r)] = t.end();
    timing.push_back(t);
  }
  return timing;
}

RunResult run(const MicroProgram& program, std::span<const std::uint64_t> input,
              std::vector<std::string>* trace) {
  validate(program);
  const auto timing = schedule_program(program);
  const auto& code = program.instructions;

  // Pre-decode multiplier schedules; the hardware never recodes at run time.
  std::vector<Schedule> schedules(code.size());
  std::vector<std::vector<StepOp>> step_ops(code.size());
  std::uint64_t total = 0;
  RunResult result;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (const auto* m = std::get_if<instr::MulCsd>(&code[i])) {
      schedules[i] = make_schedule(csd_encode(m->value, m->width));
      step_ops[i] = classify_steps(schedules[i]);
    }
    total = std::max(total, timing[i].end());
    result.final.serial_cycles += timing[i].cost;
  }

  // Per-stage instruction lists in program order.
  std::array<std::vector<std::size_t>, 3> per_stage;
  for (std::size_t i = 0; i < code.size(); ++i) {
    per_stage[static_cast<std::size_t>(timing[i].stage)].push_back(i);
  }
  std::array<std::size_t, 3> cursor{};

  PipelineState& st = result.final;
  std::size_t in_pos = 0;

  for (std::uint64_t cycle = 0; cycle < total; ++cycle) {
    const auto prev = st.regs;
    std::string act[3] = {"-", "-", "-"};

    for (int stage = 1; stage <= 2; ++stage) {
      const auto s = static_cast<std::size_t>(stage);
      auto& list = per_stage[s];
      while (cursor[s] < list.size() && timing[list[cursor[s]]].end() <= cycle) ++cursor[s];
      if (cursor[s] >= list.size()) continue;
      const std::size_t i = list[cursor[s]];
      if (timing[i].start > cycle) continue;
      const std::uint64_t k = cycle - timing[i].start;

      std::visit(
          Overloaded{
              [&](const instr::SetFmt& f) {
                st.fmt = SubwordFormat(f.width);
                act[s] = "setfmt-" + std::to_string(f.width);
              },
              [&](const instr::LoadWord&) {
                if (in_pos >= input.size()) {
                  throw StreamError("input underrun at instruction " + std::to_string(i));
                }
                const std::uint64_t raw = input[in_pos++];
                if (raw & ~kDatapathMask) {
                  throw StreamError("input word wider than 48 bits");
                }
                st.regs[idx(Reg::kR1)] = PackedWord(raw, *st.fmt);
                ++st.events.reads;
                act[s] = "ldw";
              },
              [&](const instr::MulCsd& m) {
                const Step& step = schedules[i].steps[k];
                const StepOp op = step_ops[i][k];
                const PackedWord& mult = *prev[idx(Reg::kR1)];
                const PackedWord acc =
                    k == 0 ? PackedWord::zero(mult.format()) : *prev[idx(m.target)];
                st.regs[idx(m.target)] = fused_step(acc, mult, step.digit, step.shift);
                switch (op) {
                  case StepOp::kLoad: ++st.events.loads; break;
                  case StepOp::kAdd:
                  case StepOp::kSub: ++st.events.adds; break;
                  case StepOp::kShift: ++st.events.shift_only; break;
                }
                if (step.shift > 0) ++st.events.shifts_by[static_cast<std::size_t>(step.shift)];
                act[s] = std::string("mul-") + to_string(op) + "-s" + std::to_string(step.shift);
              },
              [&](const instr::Repack& r) {
                const auto cfg = make_repack_config(r.from_w, r.to_w, r.group);
                const PackedWord& r2 = *prev[idx(Reg::kR2)];
                const PackedWord& r3 = cfg.reads_r3() ? *prev[idx(Reg::kR3)] : r2;
                PackedWord out = apply_repack(cfg, r2, r3);
                if (cfg.merges_into_output()) {
                  out = PackedWord(out.raw() | prev[idx(Reg::kR4)]->raw(), out.format());
                }
                st.regs[idx(Reg::kR4)] = out;
                ++st.events.repacks;
                act[s] = "repack-" + std::to_string(r.from_w) + '-' + std::to_string(r.to_w) +
                         "-g" + std::to_string(r.group);
              },
              [&](const instr::Bypass&) {
                st.regs[idx(Reg::kR4)] = bypass(*prev[idx(Reg::kR2)]);
                ++st.events.bypasses;
                act[s] = "bypass";
              },
              [&](const instr::StoreWord&) {
                result.output.push_back(*prev[idx(Reg::kR4)]);
                ++st.events.writes;
                act[s] = "stw";
              },
          },
          code[i]);
    }

    if (trace) {
      std::ostringstream os;
      os << "cycle=" << cycle << " s1=" << act[1] << " s2=" << act[2]
         << " r1=" << hex_or_zero(st.regs[0]) << " r2=" << hex_or_zero(st.regs[1])
         << " r3=" << hex_or_zero(st.regs[2]) << " r4=" << hex_or_zero(st.regs[3]);
      trace->push_back(os.str());
    }
    st.cycle = cycle + 1;
  }
  return result;
}

std::vector<std::string> trace(const MicroProgram& program, std::span<const std::uint64_t> input) {
  std::vector<std::string> lines;
  run(program, input, &lines);
  return lines;
}

}  // namespace softsimd
