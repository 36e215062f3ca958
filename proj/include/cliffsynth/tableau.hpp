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
#include <cstdint>
#include <string>
#include <vector>

#include "cliffsynth/gate_set.hpp"

namespace cliffsynth {

class Circuit;  // circuit.hpp

/// A Clifford gate application. Single-qubit gates satisfy q0 == q1 so that
/// acts_on() needs no special cases; CX is ordered (q0 = control, q1 = target).
struct Gate {
  GateKind kind = GateKind::I;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;

  static Gate single(GateKind k, std::uint32_t q) { return Gate{k, q, q}; }
  static Gate cx(std::uint32_t control, std::uint32_t target) {
    return Gate{GateKind::CX, control, target};
  }

  bool acts_on(std::uint32_t q) const { return q == q0 || q == q1; }
  bool operator==(const Gate&) const = default;
};

/// One (de)stabilizer generator: a signed Pauli string over n qubits with
/// X- and Z-components packed into 64-bit words (word q/64, bit q%64).
class PauliRow {
 public:
  explicit PauliRow(std::size_t n)
      : n_(n), xw_((n + 63) / 64, 0), zw_((n + 63) / 64, 0) {}

  std::size_t n() const { return n_; }

  bool x(std::size_t q) const { return (xw_[q >> 6] >> (q & 63)) & 1; }
  bool z(std::size_t q) const { return (zw_[q >> 6] >> (q & 63)) & 1; }
  bool r() const { return r_; }

  void set_x(std::size_t q, bool v) { assign_bit(xw_, q, v); }
  void set_z(std::size_t q, bool v) { assign_bit(zw_, q, v); }
  void set_r(bool v) { r_ = v; }
  void flip_r() { r_ = !r_; }

  /// Parity of the binary symplectic product <a, b> = a.x·b.z ⊕ a.z·b.x.
  /// 0 means the underlying Paulis commute, 1 that they anticommute.
  static bool symplectic_product(const PauliRow& a, const PauliRow& b);

  /// True when both components are zero, i.e. the row denotes ±identity.
  bool is_trivial() const;

  const std::vector<std::uint64_t>& x_words() const { return xw_; }
  const std::vector<std::uint64_t>& z_words() const { return zw_; }

  bool operator==(const PauliRow&) const = default;

 private:
  static void assign_bit(std::vector<std::uint64_t>& w, std::size_t q, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (q & 63);
    if (v) {
      w[q >> 6] |= mask;
    } else {
      w[q >> 6] &= ~mask;
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> xw_;
  std::vector<std::uint64_t> zw_;
  bool r_ = false;
};

/// Stabilizer/destabilizer tableau for an n-qubit Clifford unitary.
///
/// Rows 0..n-1 are the destabilizers (images of X_0..X_{n-1} under
/// conjugation), rows n..2n-1 the stabilizers (images of Z_0..Z_{n-1}).
/// Global phase is not tracked; two Cliffords are considered equal exactly
/// when their tableaus are bit-identical.
class Tableau {
 public:
  /// The tableau of the identity: destabilizer i = X_i, stabilizer i = Z_i.
  static Tableau identity(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t num_rows() const { return rows_.size(); }
  const PauliRow& row(std::size_t k) const { return rows_[k]; }
  PauliRow& row(std::size_t k) { return rows_[k]; }

  /// Conjugates every row by g, in place. Throws NonCliffordGateError for
  /// T/Tdg and std::invalid_argument for out-of-range or repeated qubits.
  void apply(const Gate& g);

  /// True when the rows satisfy the symplectic commutation pattern of a
  /// valid tableau: (de)stabilizers pairwise commute, and destabilizer i
  /// anticommutes with stabilizer j exactly when i == j.
  bool is_symplectic() const;

  std::string to_text() const;

  /// Parses to_text()'s format; see the README for the grammar. Validates
  /// shape and symplectic consistency, throwing ParseError on malformed
  /// input and std::invalid_argument on a well-formed but invalid tableau.
  static Tableau from_text(const std::string& text);

  bool operator==(const Tableau&) const = default;

 private:
  explicit Tableau(std::size_t n) : n_(n), rows_(2 * n, PauliRow(n)) {}

  std::size_t n_;
  std::vector<PauliRow> rows_;
};

/// Functional counterpart of Tableau::apply.
Tableau apply_gate(Tableau t, const Gate& g);

Tableau identity_tableau(std::size_t n);

/// Folds apply over every gate of the circuit in layer order.
Tableau simulate(const Circuit& c);

bool tableau_equal(const Tableau& a, const Tableau& b);

/// Deterministic pseudo-random Clifford: simulates a word of 12·n² gates
/// drawn from {H, S, Sdg, X, Y, Z, CX} with uniform qubit choices. Mixes
/// well in practice; makes no claim of uniformity over the Clifford group.
Tableau random_tableau(std::size_t n, std::uint64_t seed);

struct TableauHash {
  std::size_t operator()(const Tableau& t) const;
};

}  // namespace cliffsynth
