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
#include <unordered_map>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/tableau.hpp"

namespace cliffsynth {

using Clause = std::vector<int>;

/// The gate alphabet a synthesized circuit may draw from. Construction
/// checks that the set can express every Clifford: I (the encoding needs
/// an explicit "no gate here" choice), H, S, and CX must be present.
class GateSet {
 public:
  static GateSet full_clifford();

  GateSet(std::vector<GateKind> single_qubit, std::vector<GateKind> two_qubit);

  const std::vector<GateKind>& single_qubit() const { return single_qubit_; }
  const std::vector<GateKind>& two_qubit() const { return two_qubit_; }

  /// Index of k in single_qubit(), or npos.
  std::size_t single_index(GateKind k) const;

 private:
  std::vector<GateKind> single_qubit_;
  std::vector<GateKind> two_qubit_;
};

/// Dense 1-based variable numbering for one encoding: first the gate
/// variables of all layers, then the tableau cell variables of all time
/// steps, then whatever auxiliaries the clause lowering requests.
class VariableLayout {
 public:
  VariableLayout(std::size_t n, std::size_t d_max, GateSet gates);

  std::size_t n() const { return n_; }
  std::size_t d_max() const { return d_max_; }
  const GateSet& gates() const { return gates_; }

  /// Gate g (index into gates().single_qubit()) on qubit q at layer d.
  int single_gate_var(std::size_t g, std::size_t q, std::size_t d) const;
  /// Gate g (index into gates().two_qubit()) with the ordered operand
  /// pair (q0, q1) at layer d.
  int two_gate_var(std::size_t g, std::size_t q0, std::size_t q1,
                   std::size_t d) const;

  /// X-component of row k, qubit column q, at time step 0..d_max.
  int x_var(std::size_t q, std::size_t k, std::size_t step) const;
  int z_var(std::size_t q, std::size_t k, std::size_t step) const;
  /// Sign bit of row k at time step 0..d_max.
  int r_var(std::size_t k, std::size_t step) const;

  int new_aux();

  std::size_t single_gate_var_count() const;
  std::size_t two_gate_var_count() const;
  std::size_t tableau_var_count() const;
  std::size_t aux_var_count() const { return aux_count_; }
  std::size_t total_var_count() const;

 private:
  std::size_t n_;
  std::size_t d_max_;
  GateSet gates_;
  std::size_t aux_count_ = 0;
};

struct EncodingStats {
  std::size_t single_gate_vars = 0;
  std::size_t two_gate_vars = 0;
  std::size_t tableau_vars = 0;
  std::size_t aux_vars = 0;
  std::size_t total_vars = 0;
  std::size_t clauses = 0;
};

/// A propositional instance together with the layout needed to read
/// circuits back out of its models.
struct CnfInstance {
  VariableLayout layout;
  std::vector<Clause> clauses;

  std::size_t num_vars() const { return layout.total_var_count(); }
  EncodingStats stats() const;
};

enum class ExactlyOneMethod {
  kPairwise,
  kSequential,
  /// Pairwise up to 6 variables, sequential beyond.
  kAuto,
};

/// CNF for "exactly one of vars is true". Auxiliary variables (sequential
/// method only) are numbered from next_var, which is advanced accordingly.
std::vector<Clause> encode_exactly_one(const std::vector<int>& vars,
                                       ExactlyOneMethod method, int& next_var);

/// Transition relation between time steps d and d+1: every tableau cell of
/// step d+1 equals the update formula of whichever gate acts on its qubit
/// column at layer d. Gates sharing a formula on a tableau part share one
/// guarded clause group. Every emitted clause has at most 5 literals.
std::vector<Clause> encode_transitions(VariableLayout& layout, std::size_t d);

/// The three search-space reductions: no H directly after H on a qubit, no
/// single-qubit gate directly after an idle step, and no two-qubit gate
/// whose both operands idled in the previous layer. None of them excludes
/// every depth-optimal circuit (an as-soon-as-possible witness survives).
std::vector<Clause> encode_symmetry_breaking(const VariableLayout& layout);

/// Builds the full instance: step 0 pinned to the identity tableau, step
/// d_max pinned to target, transitions, per-(qubit, layer) exactly-one
/// gate consistency, and optional symmetry breakers.
CnfInstance build_encoding(const Tableau& target, std::size_t d_max,
                           const GateSet& gates, bool symmetry);

/// Reads the gate choices out of a satisfying assignment (indexed by
/// variable, entry 0 unused) and reassembles the circuit ASAP-scheduled.
/// Verifies exactly-one consistency and re-simulates against target;
/// violations raise InternalConsistencyError / DecodeVerificationError.
Circuit decode_model(const VariableLayout& layout,
                     const std::vector<bool>& assignment,
                     const Tableau& target);

}  // namespace cliffsynth
