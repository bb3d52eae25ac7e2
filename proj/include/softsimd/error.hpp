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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace softsimd {

// Operand or argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unsupported or inconsistent configuration (repack pairs, cost models).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Microprogram failed validation; carries the offending instruction index.
class ProgramError : public std::runtime_error {
 public:
  ProgramError(std::size_t index, const std::string& what)
      : std::runtime_error("instruction " + std::to_string(index) + ": " + what),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Input stream ran dry or could not be parsed.
class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hard SIMD comparison asked for an operand no baseline lane can hold.
class WorkloadError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace softsimd
