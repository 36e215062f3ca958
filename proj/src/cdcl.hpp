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

// Conflict-driven clause learning SAT solver used by the in-process
// backend: two-watched-literal propagation, first-UIP learning with
// recursive minimization, VSIDS branching with phase saving, Luby
// restarts, and activity-based learnt-clause reduction.

#include <cstdint>
#include <limits>
#include <vector>

namespace cliffsynth::internal {

class CdclSolver {
 public:
  enum class Status { kSat, kUnsat, kUnknown };

  struct Limits {
    double max_seconds = std::numeric_limits<double>::infinity();
    std::uint64_t max_conflicts = std::numeric_limits<std::uint64_t>::max();
  };

  struct Result {
    Status status = Status::kUnknown;
    /// Indexed by 1-based variable; entry 0 unused. Present iff kSat.
    std::vector<bool> model;
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
  };

  /// Clauses use DIMACS-style literals (non-zero, |lit| <= num_vars).
  /// random_freq > 0 makes that fraction of decisions uniformly random
  /// (seeded), used to diversify otherwise-identical solver runs.
  CdclSolver(int num_vars, const std::vector<std::vector<int>>& clauses,
             std::uint64_t seed = 0, double random_freq = 0.0);

  Result solve(const Limits& limits);

 private:
  using Lit = std::uint32_t;  // 2*var + (1 if negated), var 0-based
  static constexpr std::uint32_t kNoReason = 0xffffffffu;

  struct InternalClause {
    std::vector<Lit> lits;
    double activity = 0.0;
    bool learnt = false;
    bool deleted = false;
  };

  struct Watcher {
    std::uint32_t clause;
    Lit blocker;
  };

  static Lit make_lit(int dimacs_lit) {
    const int v = dimacs_lit > 0 ? dimacs_lit : -dimacs_lit;
    return static_cast<Lit>(2 * (v - 1) + (dimacs_lit < 0 ? 1 : 0));
  }
  static Lit negate(Lit l) { return l ^ 1u; }
  static std::uint32_t var_of(Lit l) { return l >> 1; }

  int value(Lit l) const {
    const std::int8_t a = assigns_[var_of(l)];
    return a == 0 ? 0 : ((l & 1) ? -a : a);
  }

  void watch(std::uint32_t ci);
  void enqueue(Lit l, std::uint32_t reason);
  std::uint32_t propagate();  // returns conflicting clause or kNoReason
  void analyze(std::uint32_t confl, std::vector<Lit>& learnt, int& bt_level);
  bool lit_redundant(Lit l, std::uint32_t levels_mask);
  void backtrack(int level);
  Lit pick_branch();
  void bump_var(std::uint32_t v);
  void bump_clause(std::uint32_t ci);
  void decay_activities();
  void reduce_db();
  std::uint32_t add_learnt(const std::vector<Lit>& lits);

  // Heap keyed by variable activity.
  void heap_insert(std::uint32_t v);
  void heap_percolate_up(std::size_t i);
  void heap_percolate_down(std::size_t i);
  std::uint32_t heap_pop();

  std::size_t num_vars_;
  std::vector<InternalClause> clauses_;
  std::vector<std::vector<Watcher>> watches_;  // indexed by Lit
  std::vector<std::int8_t> assigns_;           // +1 true, -1 false, 0 undef
  std::vector<bool> polarity_;                 // saved phases
  std::vector<std::uint32_t> reason_;
  std::vector<std::uint32_t> level_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  std::vector<std::uint32_t> heap_;      // binary max-heap of variables
  std::vector<std::uint32_t> heap_pos_;  // var -> heap index or npos

  std::vector<std::uint8_t> seen_;  // analyze scratch
  std::vector<Lit> analyze_stack_;
  std::vector<Lit> analyze_clear_;

  std::uint64_t conflicts_ = 0;
  std::uint64_t decisions_ = 0;
  std::size_t num_learnts_ = 0;
  std::uint64_t rng_state_;
  double random_freq_;
  bool ok_ = true;  // false once an empty clause is derived at level 0
};

}  // namespace cliffsynth::internal
