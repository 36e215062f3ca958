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

#include <doctest.h>

#include <random>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/errors.hpp"
#include "helpers.hpp"

using namespace cliffsynth;
using test::RowBits;

namespace {

/// Plants a single signed Pauli row into row 0 of an otherwise-identity
/// tableau so gate updates can be checked one row at a time.
Tableau with_row0(const RowBits& bits) {
  Tableau t = Tableau::identity(bits.x.size());
  for (std::size_t q = 0; q < bits.x.size(); ++q) {
    t.row(0).set_x(q, bits.x[q]);
    t.row(0).set_z(q, bits.z[q]);
  }
  t.row(0).set_r(bits.r);
  return t;
}

}  // namespace

TEST_CASE("identity tableau has X_i destabilizers and Z_i stabilizers") {
  const Tableau t = Tableau::identity(2);
  CHECK(t.to_text() == "2\n10 00 0\n01 00 0\n00 10 0\n00 01 0\n");
  CHECK(t.is_symplectic());
  CHECK(Tableau::identity(3).is_symplectic());
  CHECK_THROWS_AS(Tableau::identity(0), std::invalid_argument);
}

TEST_CASE("single-qubit updates match dense matrix conjugation") {
  const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::Sdg,
                            GateKind::X, GateKind::Y, GateKind::Z};
  for (GateKind k : kinds) {
    for (int xb = 0; xb <= 1; ++xb) {
      for (int zb = 0; zb <= 1; ++zb) {
        for (int rb = 0; rb <= 1; ++rb) {
          const RowBits in{{xb != 0}, {zb != 0}, rb != 0};
          const Gate g = Gate::single(k, 0);
          Tableau t = with_row0(in);
          t.apply(g);
          INFO("gate ", gate_name(k), " x=", xb, " z=", zb, " r=", rb);
          CHECK(test::row_bits(t, 0) == test::conjugate_pauli(in, g));
        }
      }
    }
  }
}

TEST_CASE("cx updates match dense matrix conjugation on all Pauli pairs") {
  for (int dir = 0; dir <= 1; ++dir) {
    const Gate g = dir == 0 ? Gate::cx(0, 1) : Gate::cx(1, 0);
    for (unsigned bits = 0; bits < 16; ++bits) {
      for (int rb = 0; rb <= 1; ++rb) {
        const RowBits in{{(bits & 1) != 0, (bits & 2) != 0},
                         {(bits & 4) != 0, (bits & 8) != 0},
                         rb != 0};
        Tableau t = with_row0(in);
        t.apply(g);
        INFO("dir=", dir, " bits=", bits, " r=", rb);
        CHECK(test::row_bits(t, 0) == test::conjugate_pauli(in, g));
      }
    }
  }
}

TEST_CASE("frozen conjugation spot checks") {
  // S Y S^dag = -X.
  Tableau t = with_row0(RowBits{{true}, {true}, false});
  t.apply(Gate::single(GateKind::S, 0));
  CHECK(test::row_bits(t, 0) == RowBits{{true}, {false}, true});

  // CX(0,1) maps X(x)Z to -Y(x)Y, exercising the sign term.
  Tableau u = with_row0(RowBits{{true, false}, {false, true}, false});
  u.apply(Gate::cx(0, 1));
  CHECK(test::row_bits(u, 0) ==
        RowBits{{true, true}, {true, true}, true});

  // H swaps the X and Z columns.
  Tableau h = Tableau::identity(1);
  h.apply(Gate::single(GateKind::H, 0));
  CHECK(h.to_text() == "1\n0 1 0\n1 0 0\n");
}

TEST_CASE("gate involutions and S order") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 5;  // 2..6
    const Tableau t = random_tableau(n, seed);

    for (GateKind k :
         {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z}) {
      Tableau u = t;
      u.apply(Gate::single(k, seed % n));
      u.apply(Gate::single(k, seed % n));
      CHECK(tableau_equal(u, t));
    }

    Tableau c = t;
    const auto a = static_cast<std::uint32_t>(seed % n);
    const auto b = static_cast<std::uint32_t>((seed + 1) % n);
    c.apply(Gate::cx(a, b));
    c.apply(Gate::cx(a, b));
    CHECK(tableau_equal(c, t));

    Tableau s4 = t;
    for (int i = 0; i < 4; ++i) s4.apply(Gate::single(GateKind::S, 0));
    CHECK(tableau_equal(s4, t));

    Tableau ssdg = t;
    ssdg.apply(Gate::single(GateKind::S, 0));
    ssdg.apply(Gate::single(GateKind::Sdg, 0));
    CHECK(tableau_equal(ssdg, t));
  }
}

TEST_CASE("apply preserves symplectic validity along random words") {
  std::mt19937_64 rng(7);
  Tableau t = Tableau::identity(4);
  for (int i = 0; i < 100; ++i) {
    const auto q = static_cast<std::uint32_t>(rng() % 4);
    auto p = static_cast<std::uint32_t>(rng() % 3);
    if (p >= q) ++p;
    switch (rng() % 4) {
      case 0:
        t.apply(Gate::single(GateKind::H, q));
        break;
      case 1:
        t.apply(Gate::single(GateKind::S, q));
        break;
      case 2:
        t.apply(Gate::single(GateKind::Y, q));
        break;
      default:
        t.apply(Gate::cx(q, p));
        break;
    }
    REQUIRE(t.is_symplectic());
  }
}

TEST_CASE("gate application rejects bad input") {
  Tableau t = Tableau::identity(2);
  CHECK_THROWS_AS(t.apply(Gate::single(GateKind::T, 0)), NonCliffordGateError);
  CHECK_THROWS_AS(t.apply(Gate::single(GateKind::Tdg, 1)),
                  NonCliffordGateError);
  CHECK_THROWS_AS(t.apply(Gate::single(GateKind::H, 2)), std::invalid_argument);
  CHECK_THROWS_AS(t.apply(Gate::cx(1, 1)), std::invalid_argument);
}

TEST_CASE("simulate folds gates in layer order") {
  CHECK(tableau_equal(simulate(parse_circuit("qreg q[1]; h q[0]; h q[0];")),
                      Tableau::identity(1)));
  CHECK(tableau_equal(simulate(parse_circuit("qreg q[3];")),
                      Tableau::identity(3)));

  // One CX: destabilizers X0 -> X0 X1, X1 -> X1; stabilizers Z0 -> Z0,
  // Z1 -> Z0 Z1.
  const Tableau t = simulate(parse_circuit("qreg q[2]; cx q[0],q[1];"));
  CHECK(t.to_text() == "2\n11 00 0\n01 00 0\n00 10 0\n00 11 0\n");

  CHECK_THROWS_AS(simulate(parse_circuit("qreg q[1]; t q[0];")),
                  NonCliffordGateError);
}

TEST_CASE("tableau text round-trips and rejects malformed input") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Tableau t = random_tableau(3, seed);
    CHECK(tableau_equal(Tableau::from_text(t.to_text()), t));
  }

  CHECK_THROWS_AS(Tableau::from_text(""), ParseError);
  CHECK_THROWS_AS(Tableau::from_text("x\n"), ParseError);
  CHECK_THROWS_AS(Tableau::from_text("1\n1 0 0\n"), ParseError);  // one row
  CHECK_THROWS_AS(Tableau::from_text("1\n2 0 0\n0 1 0\n"), ParseError);
  CHECK_THROWS_AS(Tableau::from_text("1\n10 0 0\n0 1 0\n"), ParseError);
  // Shape-valid but not a stabilizer tableau: row 0 commutes with row 1.
  CHECK_THROWS_AS(Tableau::from_text("1\n1 0 0\n1 0 0\n"),
                  std::invalid_argument);
  // Windows line endings and blank lines are tolerated.
  CHECK(tableau_equal(Tableau::from_text("1\r\n\r\n1 0 0\r\n0 1 1\r\n"),
                      apply_gate(Tableau::identity(1),
                                 Gate::single(GateKind::X, 0))));
}

TEST_CASE("random_tableau is deterministic, valid, and non-trivial") {
  int identity_hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Tableau a = random_tableau(3, seed);
    const Tableau b = random_tableau(3, seed);
    CHECK(tableau_equal(a, b));
    REQUIRE(a.is_symplectic());
    if (tableau_equal(random_tableau(2, seed), Tableau::identity(2))) {
      ++identity_hits;
    }
  }
  CHECK(identity_hits <= 1);
  CHECK_FALSE(
      tableau_equal(random_tableau(3, 1), random_tableau(3, 2)));
}

TEST_CASE("tableau hash distinguishes typical tableaus") {
  TableauHash h;
  CHECK(h(random_tableau(3, 5)) == h(random_tableau(3, 5)));
  CHECK(h(random_tableau(3, 5)) != h(random_tableau(3, 6)));
  Tableau flipped = Tableau::identity(2);
  flipped.row(0).set_r(true);
  CHECK(h(flipped) != h(Tableau::identity(2)));
}
