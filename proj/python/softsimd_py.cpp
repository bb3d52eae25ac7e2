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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "softsimd/analysis.hpp"
#include "softsimd/cost_model.hpp"
#include "softsimd/csd.hpp"
#include "softsimd/error.hpp"
#include "softsimd/fxp.hpp"
#include "softsimd/mul.hpp"
#include "softsimd/pipeline.hpp"
#include "softsimd/program.hpp"
#include "softsimd/repack.hpp"
#include "softsimd/word.hpp"

namespace py = pybind11;
using namespace softsimd;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

PackedWord word(std::uint64_t raw, int width) { return PackedWord(raw, SubwordFormat(width)); }

}  // namespace

PYBIND11_MODULE(_softsimd, m) {
  m.doc() = "Soft SIMD multiply datapath model";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ProgramError>(m, "ProgramError", PyExc_ValueError);
  py::register_exception<StreamError>(m, "StreamError", PyExc_RuntimeError);
  py::register_exception<WorkloadError>(m, "WorkloadError", PyExc_ValueError);

  m.attr("DATAPATH_BITS") = kDatapathBits;
  m.attr("SUPPORTED_WIDTHS") = std::vector<int>(kSupportedWidths.begin(), kSupportedWidths.end());

  m.def("quantize", [](double x, int w) { return quantize(x, w).bits(); }, py::arg("x"),
        py::arg("width"));
  m.def("to_real", [](std::int32_t bits, int w) { return fraction(to_real(QVal(bits, w))); },
        py::arg("bits"), py::arg("width"));

  m.def("csd_encode", [](std::int64_t v, int w) { return csd_encode(v, w).to_string(); },
        py::arg("value"), py::arg("width"), "CSD digits as text, MSB first, '-' for -1.");
  m.def("csd_decode", [](const std::string& s) { return csd_decode(CsdCode::parse(s)); },
        py::arg("digits"));
  m.def(
      "schedule",
      [](std::int64_t v, int w) {
        std::vector<std::pair<int, int>> out;
        for (const auto& s : make_schedule(csd_encode(v, w)).steps) out.emplace_back(s.digit, s.shift);
        return out;
      },
      py::arg("value"), py::arg("width"), "List of (digit, shift) steps, LSB first.");

  m.def(
      "pack",
      [](const std::vector<std::int32_t>& lanes, int w) { return pack_bits(lanes, SubwordFormat(w)).raw(); },
      py::arg("lanes"), py::arg("width"));
  m.def("unpack", [](std::uint64_t raw, int w) { return lanes_of(word(raw, w)); }, py::arg("word"),
        py::arg("width"));
  m.def("padd", [](std::uint64_t a, std::uint64_t b, int w, bool sub) {
        return padd(word(a, w), word(b, w), sub).raw();
      }, py::arg("a"), py::arg("b"), py::arg("width"), py::arg("subtract") = false);
  m.def("pshift", [](std::uint64_t a, int w, int s) { return pshift(word(a, w), s).raw(); },
        py::arg("a"), py::arg("width"), py::arg("sigma"));

  m.def(
      "multiply",
      [](std::uint64_t raw, int w, std::int64_t y, int yw) {
        const auto r = multiply_packed(word(raw, w), csd_encode(y, yw));
        py::dict d;
        d["word"] = r.product.raw();
        d["lanes"] = lanes_of(r.product);
        d["cycles"] = r.trace.cycles;
        d["adds"] = r.trace.adds;
        d["trace"] = r.trace.to_text();
        return d;
      },
      py::arg("word"), py::arg("width"), py::arg("multiplier"), py::arg("multiplier_width"));
  m.def("multiply_scalar", &multiply_scalar_oracle, py::arg("m"), py::arg("m_width"), py::arg("y"),
        py::arg("y_width"));

  m.def(
      "repack",
      [](const std::vector<std::uint64_t>& words, int from_w, int to_w) {
        std::vector<std::uint64_t> out;
        if (to_w > from_w) {
          for (auto w : words) {
            for (const auto& p : widen_word(word(w, from_w), to_w)) out.push_back(p.raw());
          }
        } else {
          std::vector<PackedWord> in;
          for (auto w : words) in.push_back(word(w, from_w));
          out.push_back(narrow_words(in, to_w).raw());
        }
        return out;
      },
      py::arg("words"), py::arg("from_width"), py::arg("to_width"),
      "Widening returns one word per group; narrowing consumes all words into one.");

  m.def(
      "simulate",
      [](const std::string& text, const std::vector<std::uint64_t>& input, bool with_trace) {
        std::vector<std::string> t;
        const auto r = run(parse_program(text), input, with_trace ? &t : nullptr);
        py::dict d;
        std::vector<std::uint64_t> out;
        for (const auto& w : r.output) out.push_back(w.raw());
        d["output"] = out;
        d["cycles"] = r.final.cycle;
        d["serial_cycles"] = r.final.serial_cycles;
        d["adds"] = r.final.events.adds;
        d["shift_bits"] = r.final.events.total_shift_bits();
        d["trace"] = t;
        return d;
      },
      py::arg("program"), py::arg("input"), py::arg("trace") = false);

  m.def(
      "error_sweep",
      [](int w, int y, std::uint64_t samples, std::uint64_t seed) {
        const auto r = exhaustive_error(w, y, samples, seed);
        py::dict d;
        d["sampled"] = r.sampled;
        d["pairs"] = r.pairs;
        d["wrap_count"] = r.wrap_count;
        d["exact_count"] = r.exact_count;
        d["excluded_count"] = r.excluded_count;
        d["mean_rel_err"] = r.mean_rel_err;
        d["max_abs_err_ulp"] = r.max_abs_err_ulp;
        d["mean_abs_err_ulp"] = r.mean_abs_err_ulp;
        return d;
      },
      py::arg("width"), py::arg("multiplier_width"), py::arg("samples") = 1'000'000,
      py::arg("seed") = 0x5eed);
  m.def("csd_density", [](int y) { return fraction(csd_density(y).mean_zero_fraction); }, py::arg("width"));
  m.def(
      "cycles_per_multiply",
      [](int y) {
        const auto c = cycles_per_multiply(y);
        return py::make_tuple(fraction(c.mean), c.min, c.max);
      },
      py::arg("width"), "(mean, min, max) over all multipliers of the given width.");

  m.def(
      "compare",
      [](const std::vector<std::tuple<int, int, std::uint64_t>>& workload, const std::string& baseline) {
        std::vector<WorkloadItem> wl;
        for (const auto& [w, y, n] : workload) wl.push_back({w, y, n});
        py::list rows;
        for (const auto& r : compare_hard_simd(wl, parse_baseline(baseline), CostModel{})) {
          py::dict d;
          d["w"] = r.item.w;
          d["soft_width"] = r.soft_width;
          d["soft_lanes"] = r.soft_lanes;
          d["soft_cycles_per_subword"] = fraction(r.soft_cycles_per_subword);
          d["hard_width"] = r.hard_width;
          d["hard_lanes"] = r.hard_lanes;
          d["hard_cycles_per_subword"] = fraction(r.hard_cycles_per_subword);
          d["cycle_ratio"] = fraction(r.cycle_ratio);
          rows.append(d);
        }
        return rows;
      },
      py::arg("workload"), py::arg("baseline") = "8,16");
}
