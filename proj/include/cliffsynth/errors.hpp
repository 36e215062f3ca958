// Copyright 2026 the cliffsynth developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace cliffsynth {

/// Raised when a T/Tdg gate reaches a code path that only handles the
/// Clifford group (tableau updates, synthesis targets, verification).
class NonCliffordGateError : public std::invalid_argument {
 public:
  explicit NonCliffordGateError(const std::string& msg)
      : std::invalid_argument(msg) {}
};

/// Raised by the text parsers; carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t line, std::size_t column)
      : std::runtime_error(msg + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A decoded circuit failed to reproduce its target tableau. This signals a
/// bug in the encoder or solver, never a property of the input.
class DecodeVerificationError : public std::logic_error {
 public:
  explicit DecodeVerificationError(const std::string& msg)
      : std::logic_error(msg) {}
};

/// An internal invariant was violated (exactly-one broken in a model,
/// a solver returned a non-model, reassembly changed a block's tableau).
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& msg)
      : std::logic_error(msg) {}
};

/// A search exhausted its budget before finding any circuit at all.
class BudgetExhaustedError : public std::runtime_error {
 public:
  explicit BudgetExhaustedError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace cliffsynth
