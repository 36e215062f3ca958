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
#include <stdexcept>

#include "cliffsynth/errors.hpp"

namespace cliffsynth {

GateSet GateSet::full_clifford() {
  return GateSet({GateKind::I, GateKind::H, GateKind::S, GateKind::Sdg,
                  GateKind::X, GateKind::Y, GateKind::Z},
                 {GateKind::CX});
}

GateSet::GateSet(std::vector<GateKind> single_qubit,
                 std::vector<GateKind> two_qubit)
    : single_qubit_(std::move(single_qubit)), two_qubit_(std::move(two_qubit)) {
  auto has = [](const std::vector<GateKind>& v, GateKind k) {
    return std::find(v.begin(), v.end(), k) != v.end();
  };
  for (GateKind k : single_qubit_) {
    if (is_two_qubit(k) || !is_clifford(k)) {
      throw std::invalid_argument("gate set: " + gate_name(k) +
                                  " is not a single-qubit Clifford gate");
    }
  }
  for (GateKind k : two_qubit_) {
    if (!is_two_qubit(k)) {
      throw std::invalid_argument("gate set: " + gate_name(k) +
                                  " is not a two-qubit gate");
    }
  }
  for (const auto* v : {&single_qubit_, &two_qubit_}) {
    for (std::size_t i = 0; i < v->size(); ++i) {
      for (std::size_t j = i + 1; j < v->size(); ++j) {
        if ((*v)[i] == (*v)[j]) {
          throw std::invalid_argument("gate set: duplicate gate " +
                                      gate_name((*v)[i]));
        }
      }
    }
  }
  // The encoding models idle qubits with an explicit identity choice, and
  // {H, S, CX} must be present so every Clifford target stays reachable.
  if (!has(single_qubit_, GateKind::I) || !has(single_qubit_, GateKind::H) ||
      !has(single_qubit_, GateKind::S) || !has(two_qubit_, GateKind::CX)) {
    throw std::invalid_argument(
        "gate set must contain at least id, h, s, and cx");
  }
}

std::size_t GateSet::single_index(GateKind k) const {
  for (std::size_t i = 0; i < single_qubit_.size(); ++i) {
    if (single_qubit_[i] == k) return i;
  }
  return static_cast<std::size_t>(-1);
}

VariableLayout::VariableLayout(std::size_t n, std::size_t d_max, GateSet gates)
    : n_(n), d_max_(d_max), gates_(std::move(gates)) {
  if (n == 0) throw std::invalid_argument("layout needs at least one qubit");
}

int VariableLayout::single_gate_var(std::size_t g, std::size_t q,
                                    std::size_t d) const {
  const std::size_t s = gates_.single_qubit().size();
  return static_cast<int>(1 + (d * n_ + q) * s + g);
}

int VariableLayout::two_gate_var(std::size_t g, std::size_t q0, std::size_t q1,
                                 std::size_t d) const {
  const std::size_t pairs = n_ * (n_ - 1);
  const std::size_t pair = q0 * (n_ - 1) + (q1 < q0 ? q1 : q1 - 1);
  return static_cast<int>(single_gate_var_count() + 1 +
                          (d * pairs + pair) * gates_.two_qubit().size() + g);
}

int VariableLayout::x_var(std::size_t q, std::size_t k, std::size_t step) const {
  const std::size_t gate_vars = single_gate_var_count() + two_gate_var_count();
  return static_cast<int>(gate_vars + 1 + step * (4 * n_ * n_ + 2 * n_) +
                          q * 2 * n_ + k);
}

int VariableLayout::z_var(std::size_t q, std::size_t k, std::size_t step) const {
  return x_var(q, k, step) + static_cast<int>(2 * n_ * n_);
}

int VariableLayout::r_var(std::size_t k, std::size_t step) const {
  const std::size_t gate_vars = single_gate_var_count() + two_gate_var_count();
  return static_cast<int>(gate_vars + 1 + step * (4 * n_ * n_ + 2 * n_) +
                          4 * n_ * n_ + k);
}

int VariableLayout::new_aux() {
  const std::size_t fixed = single_gate_var_count() + two_gate_var_count() +
                            tableau_var_count();
  ++aux_count_;
  return static_cast<int>(fixed + aux_count_);
}

std::size_t VariableLayout::single_gate_var_count() const {
  return gates_.single_qubit().size() * n_ * d_max_;
}

std::size_t VariableLayout::two_gate_var_count() const {
  return gates_.two_qubit().size() * n_ * (n_ - 1) * d_max_;
}

std::size_t VariableLayout::tableau_var_count() const {
  return (d_max_ + 1) * (4 * n_ * n_ + 2 * n_);
}

std::size_t VariableLayout::total_var_count() const {
  return single_gate_var_count() + two_gate_var_count() +
         tableau_var_count() + aux_count_;
}

EncodingStats CnfInstance::stats() const {
  EncodingStats s;
  s.single_gate_vars = layout.single_gate_var_count();
  s.two_gate_vars = layout.two_gate_var_count();
  s.tableau_vars = layout.tableau_var_count();
  s.aux_vars = layout.aux_var_count();
  s.total_vars = layout.total_var_count();
  s.clauses = clauses.size();
  return s;
}

std::vector<Clause> encode_exactly_one(const std::vector<int>& vars,
                                       ExactlyOneMethod method,
                                       int& next_var) {
  if (vars.empty()) {
    throw std::invalid_argument("exactly-one over an empty variable list");
  }
  std::vector<Clause> out;
  if (vars.size() == 1) {
    out.push_back({vars[0]});
    return out;
  }
  if (method == ExactlyOneMethod::kAuto) {
    method = vars.size() <= 6 ? ExactlyOneMethod::kPairwise
                              : ExactlyOneMethod::kSequential;
  }

  out.push_back(vars);  // at least one
  if (method == ExactlyOneMethod::kPairwise) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        out.push_back({-vars[i], -vars[j]});
      }
    }
    return out;
  }

  // Sequential at-most-one: s_i tracks "one of vars[0..i] is already true".
  const std::size_t m = vars.size();
  std::vector<int> s(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) s[i] = next_var++;
  out.push_back({-vars[0], s[0]});
  for (std::size_t i = 1; i + 1 < m; ++i) {
    out.push_back({-vars[i], s[i]});
    out.push_back({-s[i - 1], s[i]});
    out.push_back({-vars[i], -s[i - 1]});
  }
  out.push_back({-vars[m - 1], -s[m - 2]});
  return out;
}

namespace {

// One guarded clause group: "if any activator gate is chosen, the cells of
// this qubit column follow this update formula". With a single activator
// the gate variable itself guards the clauses; otherwise an auxiliary u
// with (activator -> u) keeps the group shared between gates.
class Group {
 public:
  Group(VariableLayout& layout, std::vector<int> activators,
        std::vector<Clause>& out)
      : out_(out) {
    if (activators.size() == 1) {
      guard_ = -activators[0];
    } else {
      const int u = layout.new_aux();
      for (int g : activators) out.push_back({-g, u});
      guard_ = -u;
    }
  }

  void equal(int lhs, int rhs) {
    out_.push_back({guard_, -lhs, rhs});
    out_.push_back({guard_, lhs, -rhs});
  }

  void zero(int lhs) { out_.push_back({guard_, -lhs}); }

  void xor2(int lhs, int a, int b) {
    out_.push_back({guard_, -lhs, a, b});
    out_.push_back({guard_, -lhs, -a, -b});
    out_.push_back({guard_, lhs, -a, b});
    out_.push_back({guard_, lhs, a, -b});
  }

  void and2(int lhs, int a, int b) {
    out_.push_back({guard_, -lhs, a});
    out_.push_back({guard_, -lhs, b});
    out_.push_back({guard_, lhs, -a, -b});
  }

  void and_not(int lhs, int a, int not_b) {
    out_.push_back({guard_, -lhs, a});
    out_.push_back({guard_, -lhs, -not_b});
    out_.push_back({guard_, lhs, -a, not_b});
  }

  void copy_of(int lhs, int a) { equal(lhs, a); }

  void and3(int lhs, int a, int b, int c) {
    out_.push_back({guard_, -lhs, a});
    out_.push_back({guard_, -lhs, b});
    out_.push_back({guard_, -lhs, c});
    out_.push_back({guard_, lhs, -a, -b, -c});
  }

 private:
  std::vector<Clause>& out_;
  int guard_ = 0;
};

// Unguarded Tseitin definition lhs <-> (a <-> b).
void define_xnor(int lhs, int a, int b, std::vector<Clause>& out) {
  out.push_back({-lhs, a, -b});
  out.push_back({-lhs, -a, b});
  out.push_back({lhs, a, b});
  out.push_back({lhs, -a, -b});
}

// Unguarded Tseitin definition lhs <-> a xor b.
void define_xor(int lhs, int a, int b, std::vector<Clause>& out) {
  out.push_back({-lhs, a, b});
  out.push_back({-lhs, -a, -b});
  out.push_back({lhs, -a, b});
  out.push_back({lhs, a, -b});
}

}  // namespace

std::vector<Clause> encode_transitions(VariableLayout& layout, std::size_t d) {
  if (d >= layout.d_max()) {
    throw std::invalid_argument("layer index beyond d_max");
  }
  const std::size_t n = layout.n();
  const std::size_t rows = 2 * n;
  const GateSet& gs = layout.gates();
  std::vector<Clause> out;

  // Single-qubit gate variables at this layer, by kind, for grouping.
  auto sq = [&](GateKind k, std::size_t q) {
    const std::size_t i = gs.single_index(k);
    return i == static_cast<std::size_t>(-1)
               ? 0
               : layout.single_gate_var(i, q, d);
  };
  auto collect = [&](std::initializer_list<GateKind> kinds, std::size_t q,
                     bool with_control_role, bool with_target_role) {
    std::vector<int> acts;
    for (GateKind k : kinds) {
      if (const int v = sq(k, q)) acts.push_back(v);
    }
    for (std::size_t g = 0; g < gs.two_qubit().size(); ++g) {
      for (std::size_t p = 0; p < n; ++p) {
        if (p == q) continue;
        if (with_control_role) {
          acts.push_back(layout.two_gate_var(g, q, p, d));
        }
        if (with_target_role) {
          acts.push_back(layout.two_gate_var(g, p, q, d));
        }
      }
    }
    return acts;
  };

  // Per-qubit sign contribution slots: slot[q][k] carries the r-flip this
  // qubit's gate applies to row k (a CX books its flip on the control).
  std::vector<std::vector<int>> slot(n, std::vector<int>(rows));
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t k = 0; k < rows; ++k) slot[q][k] = layout.new_aux();
  }

  for (std::size_t q = 0; q < n; ++q) {
    using GK = GateKind;

    // X-part: unchanged for everything except H (swap) and a CX target.
    {
      Group g(layout,
              collect({GK::I, GK::S, GK::Sdg, GK::X, GK::Y, GK::Z}, q,
                      /*control*/ true, /*target*/ false),
              out);
      for (std::size_t k = 0; k < rows; ++k) {
        g.equal(layout.x_var(q, k, d + 1), layout.x_var(q, k, d));
      }
    }
    if (const int h = sq(GK::H, q)) {
      Group g(layout, {h}, out);
      for (std::size_t k = 0; k < rows; ++k) {
        g.equal(layout.x_var(q, k, d + 1), layout.z_var(q, k, d));
      }
    }
    for (std::size_t tg = 0; tg < gs.two_qubit().size(); ++tg) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c == q) continue;
        Group g(layout, {layout.two_gate_var(tg, c, q, d)}, out);
        for (std::size_t k = 0; k < rows; ++k) {
          g.xor2(layout.x_var(q, k, d + 1), layout.x_var(q, k, d),
                 layout.x_var(c, k, d));
        }
      }
    }

    // Z-part: unchanged for I/X/Y/Z and a CX target; z+x for S/Sdg;
    // copied from x for H; z + z_target for a CX control.
    {
      Group g(layout,
              collect({GK::I, GK::X, GK::Y, GK::Z}, q, /*control*/ false,
                      /*target*/ true),
              out);
      for (std::size_t k = 0; k < rows; ++k) {
        g.equal(layout.z_var(q, k, d + 1), layout.z_var(q, k, d));
      }
    }
    if (const int h = sq(GK::H, q)) {
      Group g(layout, {h}, out);
      for (std::size_t k = 0; k < rows; ++k) {
        g.equal(layout.z_var(q, k, d + 1), layout.x_var(q, k, d));
      }
    }
    {
      std::vector<int> acts;
      if (const int v = sq(GK::S, q)) acts.push_back(v);
      if (const int v = sq(GK::Sdg, q)) acts.push_back(v);
      if (!acts.empty()) {
        Group g(layout, acts, out);
        for (std::size_t k = 0; k < rows; ++k) {
          g.xor2(layout.z_var(q, k, d + 1), layout.z_var(q, k, d),
                 layout.x_var(q, k, d));
        }
      }
    }
    for (std::size_t tg = 0; tg < gs.two_qubit().size(); ++tg) {
      for (std::size_t t = 0; t < n; ++t) {
        if (t == q) continue;
        Group g(layout, {layout.two_gate_var(tg, q, t, d)}, out);
        for (std::size_t k = 0; k < rows; ++k) {
          g.xor2(layout.z_var(q, k, d + 1), layout.z_var(q, k, d),
                 layout.z_var(t, k, d));
        }
      }
    }

    // R-part contribution slots.
    {
      Group g(layout, collect({GK::I}, q, /*control*/ false, /*target*/ true),
              out);
      for (std::size_t k = 0; k < rows; ++k) g.zero(slot[q][k]);
    }
    {
      std::vector<int> acts;
      if (const int v = sq(GK::H, q)) acts.push_back(v);
      if (const int v = sq(GK::S, q)) acts.push_back(v);
      if (!acts.empty()) {
        Group g(layout, acts, out);
        for (std::size_t k = 0; k < rows; ++k) {
          g.and2(slot[q][k], layout.x_var(q, k, d), layout.z_var(q, k, d));
        }
      }
    }
    if (const int v = sq(GK::Sdg, q)) {
      Group g(layout, {v}, out);
      for (std::size_t k = 0; k < rows; ++k) {
        g.and_not(slot[q][k], layout.x_var(q, k, d), layout.z_var(q, k, d));
      }
    }
    if (const int v = sq(GK::X, q)) {
      Group g(layout, {v}, out);
      for (std::size_t k = 0; k < rows; ++k) {
        g.copy_of(slot[q][k], layout.z_var(q, k, d));
      }
    }
    if (const int v = sq(GK::Y, q)) {
      Group g(layout, {v}, out);
      for (std::size_t k = 0; k < rows; ++k) {
        g.xor2(slot[q][k], layout.x_var(q, k, d), layout.z_var(q, k, d));
      }
    }
    if (const int v = sq(GK::Z, q)) {
      Group g(layout, {v}, out);
      for (std::size_t k = 0; k < rows; ++k) {
        g.copy_of(slot[q][k], layout.x_var(q, k, d));
      }
    }
    // CX with q as control: slot = x_q & z_t & (x_t <-> z_q), with the
    // biconditional held by an unguarded auxiliary to keep clauses short.
    for (std::size_t tg = 0; tg < gs.two_qubit().size(); ++tg) {
      for (std::size_t t = 0; t < n; ++t) {
        if (t == q) continue;
        std::vector<int> w(rows);
        for (std::size_t k = 0; k < rows; ++k) {
          w[k] = layout.new_aux();
          define_xnor(w[k], layout.x_var(t, k, d), layout.z_var(q, k, d),
                      out);
        }
        Group g(layout, {layout.two_gate_var(tg, q, t, d)}, out);
        for (std::size_t k = 0; k < rows; ++k) {
          g.and3(slot[q][k], layout.x_var(q, k, d), layout.z_var(t, k, d),
                 w[k]);
        }
      }
    }
  }

  // Sign recurrence: r' = r xor every qubit's contribution slot, lowered
  // as a chain of two-input xors per row.
  for (std::size_t k = 0; k < rows; ++k) {
    int acc = layout.r_var(k, d);
    for (std::size_t q = 0; q < n; ++q) {
      const int next =
          (q + 1 == n) ? layout.r_var(k, d + 1) : layout.new_aux();
      define_xor(next, acc, slot[q][k], out);
      acc = next;
    }
  }

  return out;
}

std::vector<Clause> encode_symmetry_breaking(const VariableLayout& layout) {
  const std::size_t n = layout.n();
  const GateSet& gs = layout.gates();
  const std::size_t h = gs.single_index(GateKind::H);
  const std::size_t id = gs.single_index(GateKind::I);
  std::vector<Clause> out;
  if (layout.d_max() < 2) return out;

  for (std::size_t d = 0; d + 1 < layout.d_max(); ++d) {
    for (std::size_t q = 0; q < n; ++q) {
      // H is self-inverse: H at d makes H at d+1 pointless.
      out.push_back({-layout.single_gate_var(h, q, d),
                     -layout.single_gate_var(h, q, d + 1)});
      // A single-qubit gate after an idle step could have fired earlier.
      for (std::size_t g = 0; g < gs.single_qubit().size(); ++g) {
        if (g == id) continue;
        out.push_back({-layout.single_gate_var(id, q, d),
                       -layout.single_gate_var(g, q, d + 1)});
      }
    }
    // Same for a two-qubit gate whose operands both idled.
    for (std::size_t g = 0; g < gs.two_qubit().size(); ++g) {
      for (std::size_t q0 = 0; q0 < n; ++q0) {
        for (std::size_t q1 = 0; q1 < n; ++q1) {
          if (q0 == q1) continue;
          out.push_back({-layout.single_gate_var(id, q0, d),
                         -layout.single_gate_var(id, q1, d),
                         -layout.two_gate_var(g, q0, q1, d + 1)});
        }
      }
    }
  }
  return out;
}

namespace {

void pin_tableau(const VariableLayout& layout, const Tableau& t,
                 std::size_t step, std::vector<Clause>& out) {
  const std::size_t n = layout.n();
  for (std::size_t k = 0; k < 2 * n; ++k) {
    for (std::size_t q = 0; q < n; ++q) {
      const int xv = layout.x_var(q, k, step);
      const int zv = layout.z_var(q, k, step);
      out.push_back({t.row(k).x(q) ? xv : -xv});
      out.push_back({t.row(k).z(q) ? zv : -zv});
    }
    const int rv = layout.r_var(k, step);
    out.push_back({t.row(k).r() ? rv : -rv});
  }
}

}  // namespace

CnfInstance build_encoding(const Tableau& target, std::size_t d_max,
                           const GateSet& gates, bool symmetry) {
  if (!target.is_symplectic()) {
    throw std::invalid_argument("synthesis target is not a valid tableau");
  }
  const std::size_t n = target.n();
  CnfInstance inst{VariableLayout(n, d_max, gates), {}};

  pin_tableau(inst.layout, Tableau::identity(n), 0, inst.clauses);
  pin_tableau(inst.layout, target, d_max, inst.clauses);

  for (std::size_t d = 0; d < d_max; ++d) {
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<int> choices;
      for (std::size_t g = 0; g < gates.single_qubit().size(); ++g) {
        choices.push_back(inst.layout.single_gate_var(g, q, d));
      }
      for (std::size_t g = 0; g < gates.two_qubit().size(); ++g) {
        for (std::size_t p = 0; p < n; ++p) {
          if (p == q) continue;
          choices.push_back(inst.layout.two_gate_var(g, q, p, d));
        }
        for (std::size_t p = 0; p < n; ++p) {
          if (p == q) continue;
          choices.push_back(inst.layout.two_gate_var(g, p, q, d));
        }
      }
      // Seed the allocator at the first free id, then register whatever
      // the exactly-one lowering consumed so the counts agree.
      int next_var = static_cast<int>(inst.layout.total_var_count()) + 1;
      const int before = next_var;
      std::vector<Clause> eo =
          encode_exactly_one(choices, ExactlyOneMethod::kAuto, next_var);
      for (int i = before; i < next_var; ++i) inst.layout.new_aux();
      for (Clause& c : eo) inst.clauses.push_back(std::move(c));
    }
    std::vector<Clause> trans = encode_transitions(inst.layout, d);
    for (Clause& c : trans) inst.clauses.push_back(std::move(c));
  }

  if (symmetry) {
    std::vector<Clause> sym = encode_symmetry_breaking(inst.layout);
    for (Clause& c : sym) inst.clauses.push_back(std::move(c));
  }
  return inst;
}

Circuit decode_model(const VariableLayout& layout,
                     const std::vector<bool>& assignment,
                     const Tableau& target) {
  const std::size_t n = layout.n();
  const GateSet& gs = layout.gates();
  auto value = [&assignment](int var) {
    return var > 0 && static_cast<std::size_t>(var) < assignment.size() &&
           assignment[static_cast<std::size_t>(var)];
  };

  std::vector<Gate> gates;
  for (std::size_t d = 0; d < layout.d_max(); ++d) {
    std::vector<int> cover(n, 0);
    std::vector<Gate> layer;
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t g = 0; g < gs.single_qubit().size(); ++g) {
        if (!value(layout.single_gate_var(g, q, d))) continue;
        ++cover[q];
        if (gs.single_qubit()[g] != GateKind::I) {
          layer.push_back(Gate::single(gs.single_qubit()[g],
                                       static_cast<std::uint32_t>(q)));
        }
      }
    }
    for (std::size_t g = 0; g < gs.two_qubit().size(); ++g) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t t = 0; t < n; ++t) {
          if (c == t) continue;
          if (!value(layout.two_gate_var(g, c, t, d))) continue;
          ++cover[c];
          ++cover[t];
          layer.push_back(Gate::cx(static_cast<std::uint32_t>(c),
                                   static_cast<std::uint32_t>(t)));
        }
      }
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (cover[q] != 1) {
        throw InternalConsistencyError(
            "model violates exactly-one at layer " + std::to_string(d) +
            ", qubit " + std::to_string(q) + " (covered " +
            std::to_string(cover[q]) + " times)");
      }
    }
    gates.insert(gates.end(), layer.begin(), layer.end());
  }

  const Circuit decoded = layerize(n, gates);
  if (!tableau_equal(simulate(decoded), target)) {
    throw DecodeVerificationError(
        "decoded circuit does not reproduce the target tableau");
  }
  return decoded;
}

}  // namespace cliffsynth
