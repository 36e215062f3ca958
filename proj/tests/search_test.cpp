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

#include "cliffsynth/search.hpp"

#include <memory>

#include "cliffsynth/errors.hpp"
#include "doctest.h"

namespace cliffsynth {
namespace {

Tableau tableau_of(std::size_t n, const std::vector<Gate>& gates) {
  Tableau t = Tableau::identity(n);
  for (const Gate& g : gates) t.apply(g);
  return t;
}

Tableau swap_tableau() {
  return tableau_of(2, {Gate::cx(0, 1), Gate::cx(1, 0), Gate::cx(0, 1)});
}

/// A backend that refuses to answer; used to script search behaviour.
class StonewallSolver final : public SatSolver {
 public:
  using SatSolver::solve;
  SatOutcome solve(std::size_t, const std::vector<Clause>&,
                   const SolveLimits&) override {
    return SatOutcome{};
  }
};

/// Returns real solvers except for the first `unknowns` queries.
SolverFactory flaky_factory(int unknowns) {
  auto remaining = std::make_shared<int>(unknowns);
  return [remaining]() -> std::unique_ptr<SatSolver> {
    if ((*remaining)-- > 0) return std::make_unique<StonewallSolver>();
    return make_internal_solver(11);
  };
}

bool log_has(const SynthesisReport& report, std::size_t depth,
             SatStatus status) {
  for (const DepthProbe& p : report.log) {
    if (p.depth == depth && p.status == status) return true;
  }
  return false;
}

SynthesisOptions default_options() { return SynthesisOptions{}; }

TEST_CASE("synth_at_depth answers single queries") {
  const GateSet gs = GateSet::full_clifford();
  const Tableau swap = swap_tableau();
  auto solver = make_internal_solver(1);

  DepthQueryResult r = synth_at_depth(swap, 2, gs, true, *solver, {});
  CHECK(r.status == SatStatus::kUnsat);
  CHECK_FALSE(r.circuit.has_value());

  r = synth_at_depth(swap, 3, gs, true, *solver, {});
  REQUIRE(r.status == SatStatus::kSat);
  REQUIRE(r.circuit.has_value());
  CHECK(r.circuit->depth() <= 3);
  CHECK(tableau_equal(simulate(*r.circuit), swap));

  r = synth_at_depth(Tableau::identity(2), 0, gs, true, *solver, {});
  CHECK(r.status == SatStatus::kSat);
  CHECK(r.circuit->depth() == 0);
}

TEST_CASE("swap costs exactly three layers, with certificate") {
  const SynthesisReport report =
      synth_optimal(swap_tableau(), default_options(), internal_solver_factory());
  CHECK(report.optimal_depth == 3);
  CHECK(report.certified);
  CHECK(report.circuit.depth() == 3);
  CHECK(tableau_equal(simulate(report.circuit), swap_tableau()));

  // Linear-up probes exactly 1, 2, 3 in order.
  REQUIRE(report.log.size() == 3);
  CHECK(report.log[0].depth == 1);
  CHECK(report.log[0].status == SatStatus::kUnsat);
  CHECK(report.log[1].depth == 2);
  CHECK(report.log[1].status == SatStatus::kUnsat);
  CHECK(report.log[2].depth == 3);
  CHECK(report.log[2].status == SatStatus::kSat);
}

TEST_CASE("identity needs no solver at all") {
  int calls = 0;
  const SolverFactory counting = [&calls]() -> std::unique_ptr<SatSolver> {
    ++calls;
    return make_internal_solver();
  };
  const SynthesisReport report =
      synth_optimal(Tableau::identity(4), default_options(), counting);
  CHECK(report.optimal_depth == 0);
  CHECK(report.certified);
  CHECK(report.circuit.depth() == 0);
  CHECK(report.log.empty());
  CHECK(calls == 0);
}

TEST_CASE("depth-one targets pick up the trivial refutation at zero") {
  const Tableau h0 = tableau_of(2, {Gate::single(GateKind::H, 0)});
  const SynthesisReport report =
      synth_optimal(h0, default_options(), internal_solver_factory());
  CHECK(report.optimal_depth == 1);
  CHECK(report.certified);
  CHECK(log_has(report, 1, SatStatus::kSat));
  CHECK(log_has(report, 0, SatStatus::kUnsat));
}

TEST_CASE("all strategies land on the same optimum") {
  for (std::uint64_t seed : {3u, 8u, 21u}) {
    const Tableau target = random_tableau(2, seed);
    const SynthesisReport base =
        synth_optimal(target, default_options(), internal_solver_factory());
    REQUIRE(base.certified);
    const std::size_t d_star = base.optimal_depth;
    INFO("seed ", seed, " optimal depth ", d_star);

    SynthesisOptions down;
    down.strategy.kind = SearchKind::kLinearDown;
    down.strategy.upper_bound = d_star + 3;
    const SynthesisReport r_down =
        synth_optimal(target, down, internal_solver_factory());
    CHECK(r_down.optimal_depth == d_star);
    CHECK(r_down.certified);

    SynthesisOptions binary;
    binary.strategy.kind = SearchKind::kBinary;
    binary.strategy.upper_bound = d_star + 2;
    const SynthesisReport r_bin =
        synth_optimal(target, binary, internal_solver_factory());
    CHECK(r_bin.optimal_depth == d_star);
    CHECK(r_bin.certified);

    SynthesisOptions geo;
    geo.strategy.kind = SearchKind::kGeometricThenBinary;
    geo.strategy.initial_guess = 1;
    const SynthesisReport r_geo =
        synth_optimal(target, geo, internal_solver_factory());
    CHECK(r_geo.optimal_depth == d_star);
    CHECK(r_geo.certified);

    // A hopeless upper bound is survived by climbing back up.
    if (d_star > 1) {
      SynthesisOptions lying;
      lying.strategy.kind = SearchKind::kLinearDown;
      lying.strategy.upper_bound = d_star - 1;
      const SynthesisReport r_lie =
          synth_optimal(target, lying, internal_solver_factory());
      CHECK(r_lie.optimal_depth == d_star);
      CHECK(r_lie.certified);
    }
  }
}

TEST_CASE("strategies that need an upper bound demand one") {
  SynthesisOptions down;
  down.strategy.kind = SearchKind::kLinearDown;
  CHECK_THROWS_AS(
      synth_optimal(swap_tableau(), down, internal_solver_factory()),
      std::invalid_argument);

  SynthesisOptions binary;
  binary.strategy.kind = SearchKind::kBinary;
  CHECK_THROWS_AS(
      synth_optimal(swap_tableau(), binary, internal_solver_factory()),
      std::invalid_argument);
}

TEST_CASE("unanswered low-depth probes leave the result uncertified") {
  // The first probe (depth 1) is stonewalled; the target needs depth 2.
  const Tableau target =
      tableau_of(2, {Gate::single(GateKind::H, 0), Gate::cx(0, 1)});
  const SynthesisReport honest =
      synth_optimal(target, default_options(), internal_solver_factory());
  REQUIRE(honest.optimal_depth == 2);

  const SynthesisReport report =
      synth_optimal(target, default_options(), flaky_factory(1));
  CHECK(report.optimal_depth == 2);
  CHECK_FALSE(report.certified);
  CHECK(log_has(report, 1, SatStatus::kUnknown));
  CHECK(log_has(report, 2, SatStatus::kSat));
}

TEST_CASE("a solver that never answers exhausts the search") {
  const SolverFactory wall = []() -> std::unique_ptr<SatSolver> {
    return std::make_unique<StonewallSolver>();
  };
  CHECK_THROWS_AS(synth_optimal(swap_tableau(), default_options(), wall),
                  BudgetExhaustedError);

  SynthesisOptions broke = default_options();
  broke.total_seconds_budget = 0.0;
  CHECK_THROWS_AS(
      synth_optimal(swap_tableau(), broke, internal_solver_factory()),
      BudgetExhaustedError);
}

TEST_CASE("single-qubit enumeration covers the whole group") {
  const GateSet gs = GateSet::full_clifford();
  const auto levels = enumerate_reachable_tableaus(1, gs, 3);
  REQUIRE(levels.size() == 4);
  CHECK(levels[0].size() == 1);
  CHECK(levels[1].size() == 6);
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  // The one-qubit Clifford group has 24 distinct tableaus; depth three
  // words over the standard alphabet reach all of them.
  CHECK(total == 24);
}

TEST_CASE("brute force agrees with certified synthesis on one qubit") {
  const GateSet gs = GateSet::full_clifford();
  const auto levels = enumerate_reachable_tableaus(1, gs, 3);
  for (std::size_t depth = 0; depth < levels.size(); ++depth) {
    for (const Tableau& t : levels[depth]) {
      CHECK(brute_force_min_depth(t, gs, 3) == depth);
      const SynthesisReport report =
          synth_optimal(t, default_options(), internal_solver_factory());
      INFO("level ", depth);
      CHECK(report.optimal_depth == depth);
      CHECK(report.certified);
    }
  }
}

TEST_CASE("brute force agrees with certified synthesis on two qubits") {
  const GateSet gs = GateSet::full_clifford();
  const auto levels = enumerate_reachable_tableaus(2, gs, 2);
  for (std::size_t depth = 0; depth < levels.size(); ++depth) {
    // Deterministic thinning keeps this a unit test; the acceptance suite
    // sweeps the full population.
    const std::size_t stride =
        levels[depth].size() <= 12 ? 1 : levels[depth].size() / 12;
    for (std::size_t i = 0; i < levels[depth].size(); i += stride) {
      const Tableau& t = levels[depth][i];
      const SynthesisReport report =
          synth_optimal(t, default_options(), internal_solver_factory());
      INFO("level ", depth, " index ", i);
      CHECK(report.optimal_depth == depth);
      CHECK(report.certified);
    }
  }
}

TEST_CASE("enumeration guards reject big inputs") {
  const GateSet gs = GateSet::full_clifford();
  CHECK_THROWS_AS(enumerate_reachable_tableaus(4, gs, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_reachable_tableaus(2, gs, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_min_depth(random_tableau(4, 1), gs, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_min_depth(random_tableau(2, 1), gs, 9),
                  std::invalid_argument);
}

TEST_CASE("brute force pins known depths") {
  const GateSet gs = GateSet::full_clifford();
  CHECK(brute_force_min_depth(Tableau::identity(2), gs, 2) == 0);
  CHECK(brute_force_min_depth(tableau_of(2, {Gate::single(GateKind::S, 1)}),
                              gs, 2) == 1);
  CHECK(brute_force_min_depth(swap_tableau(), gs, 3) == 3);
  // Beyond the cap: reported as not found.
  CHECK(brute_force_min_depth(swap_tableau(), gs, 2) == kDepthNotFound);
}

TEST_CASE("symmetry breaking does not change the optimum") {
  for (std::uint64_t seed : {2u, 5u, 13u, 31u}) {
    const Tableau target = random_tableau(2, 100 + seed);
    SynthesisOptions plain = default_options();
    plain.symmetry_breaking = false;
    const SynthesisReport with_sym =
        synth_optimal(target, default_options(), internal_solver_factory());
    const SynthesisReport without_sym =
        synth_optimal(target, plain, internal_solver_factory());
    CHECK(with_sym.optimal_depth == without_sym.optimal_depth);
    CHECK(with_sym.certified);
    CHECK(without_sym.certified);
  }
}

}  // namespace
}  // namespace cliffsynth
