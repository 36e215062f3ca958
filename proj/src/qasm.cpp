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

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/errors.hpp"

namespace cliffsynth {

namespace {

// A minimal scanner for the OpenQASM-2 subset. Operates on raw characters;
// the grammar is small enough that a token buffer would be overkill.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", line_, col_);
    }
    advance();
  }

  /// [A-Za-z_][A-Za-z0-9_.]* — the dot admits "qelib1.inc"-style names.
  std::string identifier() {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
      throw ParseError("expected identifier", line_, col_);
    }
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
           peek() == '.') {
      out += peek();
      advance();
    }
    return out;
  }

  std::size_t integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected integer", line_, col_);
    }
    std::size_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::size_t>(peek() - '0');
      advance();
    }
    return v;
  }

  void string_literal() {
    skip_ws();
    if (peek() != '"') {
      throw ParseError("expected string literal", line_, col_);
    }
    advance();
    while (peek() != '"') {
      if (pos_ >= text_.size() || peek() == '\n') {
        throw ParseError("unterminated string literal", line_, col_);
      }
      advance();
    }
    advance();
  }

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

Circuit parse_circuit(const std::string& text) {
  Scanner sc(text);
  std::string reg_name;
  std::size_t n = 0;
  bool have_reg = false;
  std::vector<Gate> gates;

  auto qubit_ref = [&]() -> std::uint32_t {
    sc.skip_ws();
    const std::size_t line = sc.line(), col = sc.col();
    const std::string name = sc.identifier();
    if (name != reg_name) {
      throw ParseError("unknown register '" + name + "'", line, col);
    }
    sc.expect('[');
    sc.skip_ws();
    const std::size_t idx_line = sc.line(), idx_col = sc.col();
    const std::size_t idx = sc.integer();
    if (idx >= n) {
      throw ParseError("qubit index " + std::to_string(idx) +
                           " out of range for register of size " +
                           std::to_string(n),
                       idx_line, idx_col);
    }
    sc.expect(']');
    return static_cast<std::uint32_t>(idx);
  };

  while (!sc.at_end()) {
    const std::size_t line = sc.line(), col = sc.col();
    const std::string word = sc.identifier();

    if (word == "OPENQASM") {
      sc.skip_ws();
      // Accept a bare version number such as 2.0.
      sc.integer();
      if (sc.peek() == '.') {
        sc.expect('.');
        sc.integer();
      }
      sc.expect(';');
    } else if (word == "include") {
      sc.string_literal();
      sc.expect(';');
    } else if (word == "qreg") {
      if (have_reg) {
        throw ParseError("only one qreg declaration is supported", line, col);
      }
      reg_name = sc.identifier();
      sc.expect('[');
      n = sc.integer();
      sc.expect(']');
      sc.expect(';');
      if (n == 0) {
        throw ParseError("register size must be positive", line, col);
      }
      have_reg = true;
    } else {
      GateKind kind;
      try {
        kind = gate_kind_from_name(word);
      } catch (const std::invalid_argument&) {
        throw ParseError("unknown gate '" + word + "'", line, col);
      }
      if (!have_reg) {
        throw ParseError("gate before qreg declaration", line, col);
      }
      if (kind == GateKind::CX) {
        const std::uint32_t control = qubit_ref();
        sc.expect(',');
        sc.skip_ws();
        const std::size_t t_line = sc.line(), t_col = sc.col();
        const std::uint32_t target = qubit_ref();
        if (control == target) {
          throw ParseError("cx control and target must differ", t_line, t_col);
        }
        gates.push_back(Gate::cx(control, target));
      } else {
        const std::uint32_t q = qubit_ref();
        // Identity gates parse fine but are not materialized.
        if (kind != GateKind::I) gates.push_back(Gate::single(kind, q));
      }
      sc.expect(';');
    }
  }

  if (!have_reg) {
    throw ParseError("missing qreg declaration", sc.line(), sc.col());
  }
  return layerize(n, gates);
}

std::string emit_circuit(const Circuit& c) {
  std::string out =
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "qreg q[" +
      std::to_string(c.n()) + "];\n";
  for (const Layer& layer : c.layers()) {
    for (const Gate& g : layer.gates) {
      if (is_two_qubit(g.kind)) {
        out += "cx q[" + std::to_string(g.q0) + "],q[" + std::to_string(g.q1) +
               "];\n";
      } else {
        out += gate_name(g.kind) + " q[" + std::to_string(g.q0) + "];\n";
      }
    }
  }
  return out;
}

}  // namespace cliffsynth
