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

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "cliffsynth/encoder.hpp"

namespace cliffsynth {

enum class SatStatus { kSat, kUnsat, kUnknown };

struct SolveStats {
  std::uint64_t conflicts = 0;
  std::uint64_t decisions = 0;
  double seconds = 0.0;
};

struct SatOutcome {
  SatStatus status = SatStatus::kUnknown;
  /// Indexed by 1-based variable id; entry 0 unused. Present iff kSat.
  std::vector<bool> model;
  SolveStats stats;
};

struct SolveLimits {
  double max_seconds = std::numeric_limits<double>::infinity();
  std::uint64_t max_conflicts = std::numeric_limits<std::uint64_t>::max();
};

/// Boundary to an arbitrary SAT backend. Implementations re-verify any
/// model against the clause list before returning it, so a kSat outcome
/// is trustworthy even if the backend is not.
class SatSolver {
 public:
  virtual ~SatSolver() = default;

  /// Raw form: variables are 1..num_vars, auxiliaries included.
  virtual SatOutcome solve(std::size_t num_vars,
                           const std::vector<Clause>& clauses,
                           const SolveLimits& limits) = 0;

  /// Convenience for encoder-produced instances.
  SatOutcome solve(const CnfInstance& instance, const SolveLimits& limits);
};

/// Produces a fresh solver per query; solvers are single-use and never
/// shared between threads.
using SolverFactory = std::function<std::unique_ptr<SatSolver>()>;

/// In-process CDCL backend. random_freq in [0, 1) diversifies runs by
/// making that fraction of branching decisions random (seeded).
std::unique_ptr<SatSolver> make_internal_solver(std::uint64_t seed = 0,
                                                double random_freq = 0.0);

/// Runs `executable path/to/instance.cnf` and parses the conventional
/// "s SATISFIABLE|UNSATISFIABLE" / "v <literals> 0" output.
std::unique_ptr<SatSolver> make_subprocess_solver(std::string executable);

SolverFactory internal_solver_factory(std::uint64_t seed = 0,
                                      double random_freq = 0.0);
SolverFactory subprocess_solver_factory(std::string executable);

std::string export_dimacs(std::size_t num_vars,
                          const std::vector<Clause>& clauses);
std::string export_dimacs(const CnfInstance& instance);

struct DimacsProblem {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

/// Parses DIMACS CNF ('c' comments, 'p cnf V C' header, zero-terminated
/// clauses). Throws ParseError on malformed input or on a literal whose
/// variable exceeds the declared count.
DimacsProblem import_dimacs(const std::string& text);

/// True when the assignment satisfies every clause.
bool model_satisfies(const std::vector<Clause>& clauses,
                     const std::vector<bool>& model);

}  // namespace cliffsynth
