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

#include "softsimd/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "softsimd/analysis.hpp"
#include "softsimd/cost_model.hpp"
#include "softsimd/csd.hpp"
#include "softsimd/error.hpp"
#include "softsimd/mul.hpp"
#include "softsimd/pipeline.hpp"
#include "softsimd/program.hpp"
#include "softsimd/repack.hpp"
#include "softsimd/word.hpp"

namespace softsimd {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StreamError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StreamError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::uint64_t> parse_words(const std::string& text) {
  std::vector<std::uint64_t> words;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      std::uint64_t v = 0;
      try {
        v = std::stoull(tok, &used, 16);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw StreamError("malformed input word '" + tok + "'");
      words.push_back(v);
    }
  }
  return words;
}

std::vector<WorkloadItem> parse_workload(const std::string& text) {
  std::vector<WorkloadItem> items;
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    WorkloadItem it;
    if (!(ls >> it.w)) continue;
    std::string extra;
    if (!(ls >> it.y >> it.words) || (ls >> extra)) {
      throw WorkloadError("workload line " + std::to_string(line_no) + ": expected `w y words`");
    }
    items.push_back(it);
  }
  return items;
}

std::vector<WorkloadItem> default_workload() {
  std::vector<WorkloadItem> items;
  for (int w = 2; w <= 16; ++w) items.push_back({w, w, 1});
  return items;
}

class Records {
 public:
  explicit Records(const std::string& path) : path_(path) {}
  void add(const std::string& s) { buf_ += s; }
  void flush() const {
    if (!path_.empty()) write_file(path_, buf_);
  }

 private:
  std::string path_;
  std::string buf_;
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Soft SIMD pipeline simulator and analysis toolkit", "softsimd"};
  app.require_subcommand(1);

  // csd
  auto* csd = app.add_subcommand("csd", "Canonical signed digit encoding");
  csd->require_subcommand(1);
  std::string csd_value;
  int csd_width = 0;
  auto* csd_encode_cmd = csd->add_subcommand("encode", "Print the CSD digits of a value");
  auto* csd_decode_cmd = csd->add_subcommand("decode", "Print the value of a digit string");
  auto* csd_schedule_cmd = csd->add_subcommand("schedule", "Print the shift-add schedule");
  for (auto* c : {csd_encode_cmd, csd_decode_cmd, csd_schedule_cmd}) {
    c->add_option("value", csd_value, "Signed decimal value (digit string for decode)")
        ->required();
    c->add_option("width", csd_width, "Digit count")->required();
  }

  // mul
  auto* mul = app.add_subcommand("mul", "Multiply packed lanes by one CSD multiplier");
  int mw = 0, yw = 0;
  std::int64_t multiplier = 0;
  std::vector<std::int32_t> lanes;
  bool mul_trace = false;
  mul->add_option("--mw", mw, "Multiplicand (lane) width")->required();
  mul->add_option("--yw", yw, "Multiplier width")->required();
  mul->add_option("--multiplier", multiplier, "Multiplier as a signed integer")->required();
  mul->add_option("--lanes", lanes, "Lane values, LSB lane first; missing lanes are 0")
      ->delimiter(',');
  mul->add_flag("--trace", mul_trace, "Print the per-step trace");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run a microprogram on the pipeline");
  std::string program_path, trace_path, input_path;
  sim->add_option("program", program_path, "Program file")->required();
  sim->add_option("--trace", trace_path, "Write the cycle trace to this path");
  sim->add_option("--input", input_path, "Input words, hex, whitespace separated (default stdin)");

  // sweep-error
  auto* sweep = app.add_subcommand("sweep-error", "Truncation error over all operand pairs");
  std::uint64_t samples = 1'000'000;
  sweep->add_option("--mw", mw, "Multiplicand width")->required();
  sweep->add_option("--yw", yw, "Multiplier width")->required();
  sweep->add_option("--samples", samples, "Sample count when widths exceed 8");

  // stats
  auto* stats = app.add_subcommand("stats", "CSD zero density and schedule lengths");
  stats->add_option("--yw", yw, "Multiplier width")->required();

  // repack
  auto* repack = app.add_subcommand("repack", "Dump a crossbar configuration");
  int from_w = 0, to_w = 0, group = 0;
  repack->add_option("--from", from_w, "Source lane width")->required();
  repack->add_option("--to", to_w, "Target lane width")->required();
  repack->add_option("--group", group, "Lane-group selector");

  // compare
  auto* compare = app.add_subcommand("compare", "Compare against a Hard SIMD baseline");
  std::string baseline_text, cost_path, workload_path;
  compare->add_option("--baseline", baseline_text, "Hard lane widths, e.g. 8,16")->required();
  compare->add_option("--cost", cost_path, "Cost model (key = value)");
  compare->add_option("--workload", workload_path, "Workload file, one `w y words` per line");

  std::string records_path;
  for (auto* c : {sweep, stats, compare, sim}) {
    c->add_option("--records", records_path, "Write machine-readable records to this path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Records records(records_path);
    if (csd_encode_cmd->parsed()) {
      std::int64_t v = 0;
      try {
        v = std::stoll(csd_value);
      } catch (const std::exception&) {
        err << "csd encode: malformed value '" << csd_value << "'\n";
        return 2;
      }
      out << csd_encode(v, csd_width).to_string() << '\n';
    } else if (csd_decode_cmd->parsed()) {
      const CsdCode code = CsdCode::parse(csd_value);
      if (code.width() != csd_width) {
        throw DomainError("digit string has " + std::to_string(code.width()) +
                          " digits, width is " + std::to_string(csd_width));
      }
      out << csd_decode(code) << '\n';
    } else if (csd_schedule_cmd->parsed()) {
      std::int64_t v = 0;
      try {
        v = std::stoll(csd_value);
      } catch (const std::exception&) {
        err << "csd schedule: malformed value '" << csd_value << "'\n";
        return 2;
      }
      const Schedule s = make_schedule(csd_encode(v, csd_width));
      for (const auto& step : s.steps) {
        out << "digit=" << static_cast<int>(step.digit) << " sigma=" << step.shift << '\n';
      }
    } else if (mul->parsed()) {
      const SubwordFormat fmt(mw);
      if (static_cast<int>(lanes.size()) > fmt.lanes()) {
        throw DomainError("too many lanes for width " + std::to_string(mw));
      }
      lanes.resize(static_cast<std::size_t>(fmt.lanes()), 0);
      const auto r = multiply_packed(pack_bits(lanes, fmt), csd_encode(multiplier, yw));
      if (mul_trace) out << r.trace.to_text();
      out << "word=" << to_hex(r.product) << '\n';
      out << "lanes=" << lanes_to_string(r.product) << '\n';
    } else if (sim->parsed()) {
      const MicroProgram prog = parse_program(read_file(program_path));
      std::string input_text;
      if (input_path.empty()) {
        input_text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        input_text = read_file(input_path);
      }
      const auto words = parse_words(input_text);
      std::vector<std::string> lines;
      const auto result = run(prog, words, trace_path.empty() ? nullptr : &lines);
      for (const auto& w : result.output) {
        out << to_hex(w) << "  w=" << w.format().width() << " lanes=" << lanes_to_string(w)
            << '\n';
      }
      const auto& e = result.final.events;
      std::ostringstream rec;
      rec << "kind=simulate cycles=" << result.final.cycle
          << " serial_cycles=" << result.final.serial_cycles << " adds=" << e.adds
          << " loads=" << e.loads << " shift_only=" << e.shift_only
          << " shifts_by_1=" << e.shifts_by[1] << " shifts_by_2=" << e.shifts_by[2]
          << " shifts_by_3=" << e.shifts_by[3] << " repacks=" << e.repacks
          << " bypasses=" << e.bypasses << " reads=" << e.reads << " writes=" << e.writes
          << '\n';
      records.add(rec.str());
      out << "cycles " << result.final.cycle << " (serialized " << result.final.serial_cycles
          << ")\n";
      if (!trace_path.empty()) {
        std::string text;
        for (const auto& l : lines) text += l + '\n';
        write_file(trace_path, text);
      }
    } else if (sweep->parsed()) {
      const auto r = exhaustive_error(mw, yw, samples);
      out << format_error_table(r);
      records.add(format_error_record(r));
    } else if (stats->parsed()) {
      const auto d = csd_density(yw);
      const auto c = cycles_per_multiply(yw);
      out << "multiplier width " << yw << '\n'
          << "  zero digit density  " << d.value() << "  (" << rational_to_string(d.mean_zero_fraction)
          << ")\n"
          << "  cycles per multiply mean " << boost::rational_cast<double>(c.mean) << "  ("
          << rational_to_string(c.mean) << ")  min " << c.min << "  max " << c.max << '\n';
      records.add("kind=stats y=" + std::to_string(yw) +
                  " zero_density=" + rational_to_string(d.mean_zero_fraction) +
                  " cycles_mean=" + rational_to_string(c.mean) +
                  " cycles_min=" + std::to_string(c.min) + " cycles_max=" + std::to_string(c.max) +
                  '\n');
    } else if (repack->parsed()) {
      out << make_repack_config(from_w, to_w, group).dump();
    } else if (compare->parsed()) {
      const auto baseline = parse_baseline(baseline_text);
      const CostModel model = cost_path.empty() ? CostModel{} : CostModel::parse(read_file(cost_path));
      const auto workload =
          workload_path.empty() ? default_workload() : parse_workload(read_file(workload_path));
      const auto rows = compare_hard_simd(workload, baseline, model);
      out << format_comparison_table(rows);
      records.add(format_comparison_records(rows));
    }
    records.flush();
  } catch (const std::exception& e) {
    err << "softsimd: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace softsimd
