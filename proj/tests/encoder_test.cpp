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

#include "cliffsynth/encoder.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "cliffsynth/errors.hpp"
#include "cliffsynth/satio.hpp"
#include "doctest.h"

namespace cliffsynth {
namespace {

/// Evaluates a clause list under a complete assignment (1-based).
bool eval_clauses(const std::vector<Clause>& clauses,
                  const std::vector<bool>& model) {
  return model_satisfies(clauses, model);
}

/// All assignments of the first `m` variables that can be extended, over
/// `aux` further variables, to satisfy `clauses`. Returned as bitmasks of
/// the first m variables.
std::set<unsigned> satisfiable_projections(const std::vector<Clause>& clauses,
                                           unsigned m, unsigned aux) {
  std::set<unsigned> out;
  const unsigned total = m + aux;
  REQUIRE(total <= 20);
  for (unsigned bits = 0; bits < (1u << total); ++bits) {
    std::vector<bool> model(total + 1, false);
    for (unsigned v = 0; v < total; ++v) model[v + 1] = (bits >> v) & 1u;
    if (eval_clauses(clauses, model)) out.insert(bits & ((1u << m) - 1));
  }
  return out;
}

std::set<std::vector<int>> normalized(std::vector<Clause> clauses) {
  std::set<std::vector<int>> out;
  for (Clause& c : clauses) {
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

Tableau tableau_of(std::size_t n, const std::vector<Gate>& gates) {
  Tableau t = Tableau::identity(n);
  for (const Gate& g : gates) t.apply(g);
  return t;
}

SatOutcome solve_instance(const CnfInstance& inst) {
  auto solver = make_internal_solver(7);
  return solver->solve(inst, SolveLimits{});
}

TEST_CASE("variable layout matches the closed-form counts") {
  const GateSet gs = GateSet::full_clifford();

  VariableLayout ex(3, 2, gs);
  CHECK(ex.single_gate_var_count() == 42);  // 7 gates * 3 qubits * 2 layers
  CHECK(ex.two_gate_var_count() == 12);     // 3*2 ordered pairs * 2 layers
  CHECK(ex.single_gate_var_count() + ex.two_gate_var_count() == 54);
  CHECK(ex.tableau_var_count() == 126);  // (2+1) * (4*9 + 6)
  CHECK(ex.total_var_count() == 54 + 126);

  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t d = 1; d <= 6; ++d) {
      VariableLayout layout(n, d, gs);
      CHECK(layout.single_gate_var_count() == 7 * n * d);
      CHECK(layout.two_gate_var_count() == n * (n - 1) * d);
      CHECK(layout.tableau_var_count() == (d + 1) * (4 * n * n + 2 * n));
      CHECK(layout.aux_var_count() == 0);
    }
  }
}

TEST_CASE("variable numbering is a dense 1-based bijection") {
  const GateSet gs = GateSet::full_clifford();
  const std::size_t n = 3, d_max = 2;
  VariableLayout layout(n, d_max, gs);

  std::set<int> seen;
  for (std::size_t d = 0; d < d_max; ++d) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t g = 0; g < gs.single_qubit().size(); ++g) {
        seen.insert(layout.single_gate_var(g, q, d));
      }
    }
    for (std::size_t q0 = 0; q0 < n; ++q0) {
      for (std::size_t q1 = 0; q1 < n; ++q1) {
        if (q0 != q1) seen.insert(layout.two_gate_var(0, q0, q1, d));
      }
    }
  }
  for (std::size_t step = 0; step <= d_max; ++step) {
    for (std::size_t k = 0; k < 2 * n; ++k) {
      for (std::size_t q = 0; q < n; ++q) {
        seen.insert(layout.x_var(q, k, step));
        seen.insert(layout.z_var(q, k, step));
      }
      seen.insert(layout.r_var(k, step));
    }
  }
  CHECK(seen.size() == layout.total_var_count());
  CHECK(*seen.begin() == 1);
  CHECK(*seen.rbegin() == static_cast<int>(layout.total_var_count()));

  const int top = static_cast<int>(layout.total_var_count());
  CHECK(layout.new_aux() == top + 1);
  CHECK(layout.new_aux() == top + 2);
  CHECK(layout.aux_var_count() == 2);
  CHECK(layout.total_var_count() == static_cast<std::size_t>(top) + 2);
}

TEST_CASE("exactly-one truth table for every method and width") {
  for (unsigned m = 1; m <= 7; ++m) {
    std::vector<int> vars;
    for (unsigned i = 1; i <= m; ++i) vars.push_back(static_cast<int>(i));
    std::set<unsigned> one_hot;
    for (unsigned i = 0; i < m; ++i) one_hot.insert(1u << i);

    for (ExactlyOneMethod method :
         {ExactlyOneMethod::kPairwise, ExactlyOneMethod::kSequential,
          ExactlyOneMethod::kAuto}) {
      int next_var = static_cast<int>(m) + 1;
      const std::vector<Clause> clauses =
          encode_exactly_one(vars, method, next_var);
      const unsigned aux = static_cast<unsigned>(next_var) - m - 1;
      INFO("m=", m, " method=", static_cast<int>(method), " aux=", aux);
      CHECK(satisfiable_projections(clauses, m, aux) == one_hot);
    }
  }
}

TEST_CASE("exactly-one encoding sizes") {
  // Pairwise m=4: the one covering clause plus C(4,2) exclusion pairs.
  {
    int next_var = 5;
    const auto clauses = encode_exactly_one({1, 2, 3, 4},
                                            ExactlyOneMethod::kPairwise,
                                            next_var);
    CHECK(clauses.size() == 7);
    CHECK(next_var == 5);
  }
  // Sequential m=4: three commander auxiliaries, nine clauses, and exactly
  // the four one-hot projections of the sixteen inputs satisfiable.
  {
    int next_var = 5;
    const auto clauses = encode_exactly_one({1, 2, 3, 4},
                                            ExactlyOneMethod::kSequential,
                                            next_var);
    CHECK(next_var == 8);
    CHECK(clauses.size() == 9);
    const auto projections = satisfiable_projections(clauses, 4, 3);
    CHECK(projections.size() == 4);
  }
  // Auto switches to the sequential form above six variables.
  {
    int next_var = 7;
    encode_exactly_one({1, 2, 3, 4, 5, 6}, ExactlyOneMethod::kAuto, next_var);
    CHECK(next_var == 7);
    next_var = 8;
    encode_exactly_one({1, 2, 3, 4, 5, 6, 7}, ExactlyOneMethod::kAuto,
                       next_var);
    CHECK(next_var == 8 + 6);
  }
  {
    int next_var = 2;
    const auto clauses =
        encode_exactly_one({1}, ExactlyOneMethod::kAuto, next_var);
    CHECK(clauses == std::vector<Clause>{{1}});
  }
  {
    int next_var = 1;
    CHECK_THROWS_AS(encode_exactly_one({}, ExactlyOneMethod::kAuto, next_var),
                    std::invalid_argument);
  }
}

TEST_CASE("every clause is narrow except the per-slot covering clauses") {
  const GateSet gs = GateSet::full_clifford();
  for (std::size_t n : {2, 3, 4}) {
    for (std::size_t d : {1, 3}) {
      const Tableau target = random_tableau(n, 17 * n + d);
      const CnfInstance inst = build_encoding(target, d, gs, true);
      const std::size_t covering_width = 7 + 2 * (n - 1);
      std::size_t wide = 0;
      for (const Clause& c : inst.clauses) {
        INFO("n=", n, " d=", d, " clause width ", c.size());
        const bool narrow = c.size() <= 5;
        const bool covering = c.size() == covering_width;
        CHECK((narrow || covering));
        if (covering) ++wide;
      }
      // One gate-choice covering clause per (layer, qubit).
      CHECK(wide == n * d);
    }
  }
}

TEST_CASE("zero-depth instances degenerate to unit-clause consistency") {
  const GateSet gs = GateSet::full_clifford();

  const CnfInstance id_inst =
      build_encoding(Tableau::identity(3), 0, gs, true);
  CHECK(id_inst.stats().single_gate_vars == 0);
  CHECK(id_inst.stats().two_gate_vars == 0);
  CHECK(id_inst.stats().tableau_vars == 4 * 9 + 6);
  for (const Clause& c : id_inst.clauses) CHECK(c.size() == 1);
  const SatOutcome id_out = solve_instance(id_inst);
  REQUIRE(id_out.status == SatStatus::kSat);
  const Circuit decoded = decode_model(id_inst.layout, id_out.model,
                                       Tableau::identity(3));
  CHECK(decoded.depth() == 0);

  const Tableau h0 = tableau_of(3, {Gate::single(GateKind::H, 0)});
  const CnfInstance bad = build_encoding(h0, 0, gs, true);
  CHECK(solve_instance(bad).status == SatStatus::kUnsat);
}

TEST_CASE("a circuit of known depth round-trips through the encoding") {
  const GateSet gs = GateSet::full_clifford();
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const Tableau target = random_tableau(n, 1000 + seed);

    // Find some satisfiable depth by climbing; at each satisfiable depth
    // the decoded witness must reproduce the target within that depth.
    for (std::size_t d = 1; d <= 8; ++d) {
      const bool symmetry = (seed % 2) == 0;
      const CnfInstance inst = build_encoding(target, d, gs, symmetry);
      const SatOutcome out = solve_instance(inst);
      REQUIRE(out.status != SatStatus::kUnknown);
      if (out.status == SatStatus::kUnsat) continue;
      const Circuit c = decode_model(inst.layout, out.model, target);
      CHECK(c.depth() <= d);
      CHECK(tableau_equal(simulate(c), target));

      // Monotonicity: one more layer stays satisfiable.
      const CnfInstance wider = build_encoding(target, d + 1, gs, symmetry);
      CHECK(solve_instance(wider).status == SatStatus::kSat);
      break;
    }
  }
}

TEST_CASE("decode_model rejects inconsistent assignments") {
  const GateSet gs = GateSet::full_clifford();
  const Tableau target = tableau_of(2, {Gate::single(GateKind::H, 0)});
  const CnfInstance inst = build_encoding(target, 1, gs, true);
  const SatOutcome out = solve_instance(inst);
  REQUIRE(out.status == SatStatus::kSat);

  // A genuine model decodes.
  const Circuit c = decode_model(inst.layout, out.model, target);
  CHECK(c.depth() == 1);

  // Clearing every gate choice of qubit 0 leaves it uncovered.
  std::vector<bool> uncovered = out.model;
  for (std::size_t g = 0; g < gs.single_qubit().size(); ++g) {
    uncovered[static_cast<std::size_t>(inst.layout.single_gate_var(g, 0, 0))] =
        false;
  }
  uncovered[static_cast<std::size_t>(inst.layout.two_gate_var(0, 0, 1, 0))] =
      false;
  uncovered[static_cast<std::size_t>(inst.layout.two_gate_var(0, 1, 0, 0))] =
      false;
  CHECK_THROWS_AS(decode_model(inst.layout, uncovered, target),
                  InternalConsistencyError);

  // Forcing two simultaneous choices is just as inconsistent.
  std::vector<bool> doubled = out.model;
  doubled[static_cast<std::size_t>(
      inst.layout.single_gate_var(gs.single_index(GateKind::X), 0, 0))] = true;
  doubled[static_cast<std::size_t>(
      inst.layout.single_gate_var(gs.single_index(GateKind::Y), 0, 0))] = true;
  CHECK_THROWS_AS(decode_model(inst.layout, doubled, target),
                  InternalConsistencyError);

  // A consistent model decoded against the wrong target fails verification.
  CHECK_THROWS_AS(decode_model(inst.layout, out.model, Tableau::identity(2)),
                  DecodeVerificationError);
}

TEST_CASE("symmetry breaker clause inventory") {
  const GateSet gs = GateSet::full_clifford();

  SUBCASE("single qubit, two layers: the exact clause set") {
    VariableLayout layout(1, 2, gs);
    const auto clauses = normalized(encode_symmetry_breaking(layout));

    std::set<std::vector<int>> expected;
    auto sg = [&](GateKind k, std::size_t d) {
      return layout.single_gate_var(gs.single_index(k), 0, d);
    };
    auto insert_sorted = [&expected](std::vector<int> c) {
      std::sort(c.begin(), c.end());
      expected.insert(std::move(c));
    };
    insert_sorted({-sg(GateKind::H, 0), -sg(GateKind::H, 1)});
    for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X,
                       GateKind::Y, GateKind::Z}) {
      insert_sorted({-sg(GateKind::I, 0), -sg(k, 1)});
    }
    CHECK(clauses == expected);
  }

  SUBCASE("counts scale with layers and qubit pairs") {
    VariableLayout layout(2, 3, gs);
    const auto clauses = encode_symmetry_breaking(layout);
    // Per adjacent layer pair: 2 H-chains, 2*6 idle-then-act, 2 idle pairs.
    CHECK(clauses.size() == 2 * (2 + 12 + 2));

    VariableLayout one_layer(3, 1, gs);
    CHECK(encode_symmetry_breaking(one_layer).empty());
  }

  SUBCASE("the idle-pair breaker names the two-qubit gate") {
    VariableLayout layout(2, 2, gs);
    const auto clauses = normalized(encode_symmetry_breaking(layout));
    const std::size_t id = gs.single_index(GateKind::I);
    std::vector<int> c = {-layout.single_gate_var(id, 0, 0),
                          -layout.single_gate_var(id, 1, 0),
                          -layout.two_gate_var(0, 0, 1, 1)};
    std::sort(c.begin(), c.end());
    CHECK(clauses.count(c) == 1);
  }
}

TEST_CASE("gate sets are validated") {
  CHECK_NOTHROW(GateSet({GateKind::I, GateKind::H, GateKind::S},
                        {GateKind::CX}));
  CHECK_THROWS_AS(GateSet({GateKind::H, GateKind::S}, {GateKind::CX}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GateSet({GateKind::I, GateKind::H}, {GateKind::CX}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GateSet({GateKind::I, GateKind::H, GateKind::S}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GateSet({GateKind::I, GateKind::H, GateKind::S, GateKind::T},
                          {GateKind::CX}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GateSet({GateKind::I, GateKind::H, GateKind::S, GateKind::H},
                          {GateKind::CX}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GateSet({GateKind::I, GateKind::H, GateKind::S},
                          {GateKind::H}),
                  std::invalid_argument);

  const GateSet gs = GateSet::full_clifford();
  CHECK(gs.single_index(GateKind::I) == 0);
  CHECK(gs.single_index(GateKind::CX) == static_cast<std::size_t>(-1));
}

TEST_CASE("restricted gate sets synthesize within their alphabet") {
  // {I, H, S, CX} generates the Clifford group; a witness never uses a
  // gate outside the declared set.
  const GateSet small({GateKind::I, GateKind::H, GateKind::S}, {GateKind::CX});
  const Tableau target = random_tableau(2, 99);
  for (std::size_t d = 1; d <= 10; ++d) {
    const CnfInstance inst = build_encoding(target, d, small, true);
    const SatOutcome out = solve_instance(inst);
    REQUIRE(out.status != SatStatus::kUnknown);
    if (out.status == SatStatus::kUnsat) continue;
    const Circuit c = decode_model(inst.layout, out.model, target);
    for (const Gate& g : flatten(c)) {
      const bool allowed = g.kind == GateKind::H || g.kind == GateKind::S ||
                           g.kind == GateKind::CX;
      CHECK(allowed);
    }
    return;
  }
  FAIL("no satisfiable depth found for the restricted gate set");
}

}  // namespace
}  // namespace cliffsynth
