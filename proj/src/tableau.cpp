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

#include "cliffsynth/tableau.hpp"

#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/errors.hpp"

namespace cliffsynth {

namespace {

// Draws uniformly from [0, bound) using multiply-shift rejection. We avoid
// std::uniform_int_distribution because its output is implementation-defined
// and random_tableau promises identical results across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t v = rng();
    const unsigned __int128 m = static_cast<unsigned __int128>(v) * bound;
    if (static_cast<std::uint64_t>(m) >= threshold) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

void check_qubit(std::size_t n, std::uint32_t q) {
  if (q >= n) {
    throw std::invalid_argument("qubit index " + std::to_string(q) +
                                " out of range for n=" + std::to_string(n));
  }
}

}  // namespace

bool PauliRow::symplectic_product(const PauliRow& a, const PauliRow& b) {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < a.xw_.size(); ++w) {
    acc ^= (a.xw_[w] & b.zw_[w]) ^ (a.zw_[w] & b.xw_[w]);
  }
  return std::popcount(acc) & 1;
}

bool PauliRow::is_trivial() const {
  for (std::size_t w = 0; w < xw_.size(); ++w) {
    if (xw_[w] | zw_[w]) return false;
  }
  return true;
}

Tableau Tableau::identity(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("tableau needs at least one qubit");
  }
  Tableau t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.rows_[i].set_x(i, true);       // destabilizer i = X_i
    t.rows_[n + i].set_z(i, true);   // stabilizer i = Z_i
  }
  return t;
}

void Tableau::apply(const Gate& g) {
  if (!is_clifford(g.kind)) {
    throw NonCliffordGateError("cannot apply " + gate_name(g.kind) +
                               " to a stabilizer tableau");
  }
  check_qubit(n_, g.q0);
  check_qubit(n_, g.q1);
  if (g.kind == GateKind::CX && g.q0 == g.q1) {
    throw std::invalid_argument("cx control and target must differ");
  }

  // Sign updates read bit values from before the column update; the rules
  // below are fixed against a direct Pauli-matrix conjugation oracle.
  const std::uint32_t j = g.q0;
  switch (g.kind) {
    case GateKind::I:
      break;
    case GateKind::H:
      for (PauliRow& row : rows_) {
        const bool xb = row.x(j), zb = row.z(j);
        if (xb && zb) row.flip_r();
        row.set_x(j, zb);
        row.set_z(j, xb);
      }
      break;
    case GateKind::S:
      for (PauliRow& row : rows_) {
        const bool xb = row.x(j), zb = row.z(j);
        if (xb && zb) row.flip_r();
        row.set_z(j, zb ^ xb);
      }
      break;
    case GateKind::Sdg:
      for (PauliRow& row : rows_) {
        const bool xb = row.x(j), zb = row.z(j);
        if (xb && !zb) row.flip_r();
        row.set_z(j, zb ^ xb);
      }
      break;
    case GateKind::X:
      for (PauliRow& row : rows_) {
        if (row.z(j)) row.flip_r();
      }
      break;
    case GateKind::Y:
      for (PauliRow& row : rows_) {
        if (row.x(j) ^ row.z(j)) row.flip_r();
      }
      break;
    case GateKind::Z:
      for (PauliRow& row : rows_) {
        if (row.x(j)) row.flip_r();
      }
      break;
    case GateKind::CX: {
      const std::uint32_t c = g.q0, t = g.q1;
      for (PauliRow& row : rows_) {
        const bool xc = row.x(c), zc = row.z(c);
        const bool xt = row.x(t), zt = row.z(t);
        if (xc && zt && !(xt ^ zc)) row.flip_r();
        row.set_x(t, xt ^ xc);
        row.set_z(c, zc ^ zt);
      }
      break;
    }
    case GateKind::T:
    case GateKind::Tdg:
      break;  // unreachable, rejected above
  }
}

bool Tableau::is_symplectic() const {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    for (std::size_t j = i; j < 2 * n_; ++j) {
      const bool anti = PauliRow::symplectic_product(rows_[i], rows_[j]);
      // Destabilizer i must anticommute with stabilizer i and nothing else.
      const bool expected = (j == i + n_);
      if (anti != expected) return false;
    }
  }
  return true;
}

std::string Tableau::to_text() const {
  std::string out = std::to_string(n_) + "\n";
  for (const PauliRow& row : rows_) {
    for (std::size_t q = 0; q < n_; ++q) out += row.x(q) ? '1' : '0';
    out += ' ';
    for (std::size_t q = 0; q < n_; ++q) out += row.z(q) ? '1' : '0';
    out += ' ';
    out += row.r() ? '1' : '0';
    out += '\n';
  }
  return out;
}

Tableau Tableau::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&](const char* what) {
    while (std::getline(in, line)) {
      ++lineno;
      // Tolerate blank lines and trailing carriage returns.
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return;
    }
    throw ParseError(std::string("expected ") + what + ", got end of input",
                     lineno + 1, 1);
  };

  next_line("qubit count");
  std::size_t n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(line, &pos);
    if (pos != line.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("expected qubit count, got '" + line + "'", lineno, 1);
  }
  if (n == 0) {
    throw ParseError("qubit count must be positive", lineno, 1);
  }

  Tableau t(n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    next_line("tableau row");
    std::size_t col = 0;
    auto read_bits = [&](auto&& sink) {
      for (std::size_t q = 0; q < n; ++q, ++col) {
        if (col >= line.size() || (line[col] != '0' && line[col] != '1')) {
          throw ParseError("expected bit", lineno, col + 1);
        }
        sink(q, line[col] == '1');
      }
    };
    auto read_space = [&] {
      if (col >= line.size() || line[col] != ' ') {
        throw ParseError("expected space", lineno, col + 1);
      }
      ++col;
    };
    read_bits([&](std::size_t q, bool v) { t.rows_[k].set_x(q, v); });
    read_space();
    read_bits([&](std::size_t q, bool v) { t.rows_[k].set_z(q, v); });
    read_space();
    if (col >= line.size() || (line[col] != '0' && line[col] != '1')) {
      throw ParseError("expected sign bit", lineno, col + 1);
    }
    t.rows_[k].set_r(line[col] == '1');
    if (++col != line.size()) {
      throw ParseError("trailing characters after row", lineno, col + 1);
    }
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      throw ParseError("trailing content after last row", lineno, 1);
    }
  }

  if (!t.is_symplectic()) {
    throw std::invalid_argument(
        "tableau rows violate the symplectic commutation pattern; "
        "not a valid Clifford tableau");
  }
  return t;
}

Tableau apply_gate(Tableau t, const Gate& g) {
  t.apply(g);
  return t;
}

Tableau identity_tableau(std::size_t n) { return Tableau::identity(n); }

Tableau simulate(const Circuit& c) {
  Tableau t = Tableau::identity(c.n());
  for (const Layer& layer : c.layers()) {
    for (const Gate& g : layer.gates) t.apply(g);
  }
  return t;
}

bool tableau_equal(const Tableau& a, const Tableau& b) { return a == b; }

Tableau random_tableau(std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("tableau needs at least one qubit");
  }
  std::mt19937_64 rng(seed);
  Tableau t = Tableau::identity(n);
  constexpr GateKind kWordGates[] = {GateKind::H, GateKind::S, GateKind::Sdg,
                                     GateKind::X, GateKind::Y, GateKind::Z,
                                     GateKind::CX};
  const std::uint64_t num_kinds = (n >= 2) ? 7 : 6;
  const std::size_t steps = 12 * n * n;
  for (std::size_t i = 0; i < steps; ++i) {
    const GateKind kind = kWordGates[bounded(rng, num_kinds)];
    if (kind == GateKind::CX) {
      const auto c = static_cast<std::uint32_t>(bounded(rng, n));
      auto tq = static_cast<std::uint32_t>(bounded(rng, n - 1));
      if (tq >= c) ++tq;
      t.apply(Gate::cx(c, tq));
    } else {
      t.apply(Gate::single(kind, static_cast<std::uint32_t>(bounded(rng, n))));
    }
  }
  return t;
}

std::size_t TableauHash::operator()(const Tableau& t) const {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(t.n());
  for (std::size_t k = 0; k < t.num_rows(); ++k) {
    const PauliRow& row = t.row(k);
    for (std::uint64_t w : row.x_words()) mix(w);
    for (std::uint64_t w : row.z_words()) mix(w);
    mix(row.r());
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cliffsynth
