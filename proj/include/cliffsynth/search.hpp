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
#include <limits>
#include <optional>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/encoder.hpp"
#include "cliffsynth/satio.hpp"
#include "cliffsynth/tableau.hpp"

namespace cliffsynth {

enum class SearchKind {
  /// Query depths 1, 2, 3, ... until the first SAT. Every smaller depth
  /// is refuted on the way, so the result is certified by construction.
  kLinearUp,
  /// Start from a known upper bound and decrement until UNSAT.
  kLinearDown,
  /// Binary search; requires an upper bound known to be SAT.
  kBinary,
  /// Double the depth from an initial guess until SAT, then binary
  /// search inside (last UNSAT, first SAT].
  kGeometricThenBinary,
};

struct SearchStrategy {
  SearchKind kind = SearchKind::kLinearUp;
  /// Starting depth for kGeometricThenBinary (defaults to 1).
  std::optional<std::size_t> initial_guess;
  /// Depth known (kLinearDown, kBinary) or believed to admit a circuit.
  std::optional<std::size_t> upper_bound;
};

struct DepthProbe {
  std::size_t depth = 0;
  SatStatus status = SatStatus::kUnknown;
  SolveStats stats;
};

struct SynthesisReport {
  Circuit circuit;
  std::size_t optimal_depth = 0;
  /// True iff the log records UNSAT at optimal_depth - 1 (or the depth is
  /// 0, where there is nothing to refute).
  bool certified = false;
  std::vector<DepthProbe> log;
  double total_seconds = 0.0;
};

struct SynthesisOptions {
  GateSet gates = GateSet::full_clifford();
  bool symmetry_breaking = true;
  SearchStrategy strategy;
  /// Budget applied to each individual depth query.
  SolveLimits per_query_limits;
  /// Overall wall-clock budget for one synth_optimal call (infinite by
  /// default); queries started after it expires return kUnknown.
  double total_seconds_budget = std::numeric_limits<double>::infinity();
};

/// One bounded-depth query: SAT yields the decoded circuit (depth <= d).
struct DepthQueryResult {
  SatStatus status = SatStatus::kUnknown;
  std::optional<Circuit> circuit;
  SolveStats stats;
};

DepthQueryResult synth_at_depth(const Tableau& target, std::size_t d,
                                const GateSet& gates, bool symmetry,
                                SatSolver& solver, const SolveLimits& limits);

/// Finds a depth-minimal circuit for target with an UNSAT certificate at
/// one less than the reported depth whenever budgets allow. Throws
/// BudgetExhaustedError if no circuit at all was found within budget.
SynthesisReport synth_optimal(const Tableau& target,
                              const SynthesisOptions& options,
                              const SolverFactory& solver_factory);

inline constexpr std::size_t kDepthNotFound = static_cast<std::size_t>(-1);

/// Independent oracle: exhaustive breadth-first enumeration over all
/// gate layers (full coverage of distinct layers, no symmetry pruning).
/// Returns the minimal depth <= d_cap realizing target, or kDepthNotFound.
/// Guarded to n <= 3 and d_cap <= 4; anything larger throws.
std::size_t brute_force_min_depth(const Tableau& target, const GateSet& gates,
                                  std::size_t d_cap);

/// All tableaus reachable at each depth 0..d_cap (index = depth at which
/// the tableau is first reached). Shares the enumeration guard above.
std::vector<std::vector<Tableau>> enumerate_reachable_tableaus(
    std::size_t n, const GateSet& gates, std::size_t d_cap);

}  // namespace cliffsynth
