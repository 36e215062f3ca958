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

// Test-only oracles that are deliberately independent of the library's
// tableau update rules: dense complex-matrix conjugation over explicit
// Pauli matrices. Slow and only usable for tiny n, which is the point --
// disagreement between these and the bit-level rules indicates a bug in
// the rules, not in the oracle.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/tableau.hpp"

namespace cliffsynth::test {

using cd = std::complex<double>;
using Mat = std::vector<std::vector<cd>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<cd>(n)); }

inline Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat dagger(const Mat& a) {
  const std::size_t n = a.size();
  Mat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = std::conj(a[j][i]);
  return c;
}

inline bool approx_equal(const Mat& a, const Mat& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (std::abs(a[i][j] - b[i][j]) > tol) return false;
  return true;
}

/// Kronecker product with the left factor acting on the lower qubit index,
/// i.e. basis state index = q0-bit * 2^(n-1) + ... + q_{n-1}-bit.
inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t ra = a.size(), rb = b.size();
  Mat c = zeros(ra * rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < rb; ++l)
          c[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
  return c;
}

inline const Mat kI{{1, 0}, {0, 1}};
inline const Mat kX{{0, 1}, {1, 0}};
inline const Mat kY{{0, cd(0, -1)}, {cd(0, 1), 0}};
inline const Mat kZ{{1, 0}, {0, -1}};

/// A signed n-qubit Pauli string in the same (x, z, r) coordinates as a
/// tableau row; (x=1, z=1) denotes Y, matching the phase convention where
/// a row is (-1)^r * prod_j i^{x_j z_j} X^{x_j} Z^{z_j}.
struct RowBits {
  std::vector<bool> x, z;
  bool r = false;

  bool operator==(const RowBits&) const = default;
};

inline Mat pauli_matrix(const RowBits& row) {
  Mat m{{cd(row.r ? -1 : 1)}};
  for (std::size_t q = 0; q < row.x.size(); ++q) {
    const Mat& p = row.x[q] ? (row.z[q] ? kY : kX) : (row.z[q] ? kZ : kI);
    m = kron(m, p);
  }
  return m;
}

/// Dense matrix of gate g embedded in an n-qubit register.
inline Mat gate_matrix(const Gate& g, std::size_t n) {
  const auto one_qubit = [](GateKind k) -> Mat {
    const double s = 1.0 / std::sqrt(2.0);
    switch (k) {
      case GateKind::I:
        return kI;
      case GateKind::H:
        return {{s, s}, {s, -s}};
      case GateKind::S:
        return {{1, 0}, {0, cd(0, 1)}};
      case GateKind::Sdg:
        return {{1, 0}, {0, cd(0, -1)}};
      case GateKind::X:
        return kX;
      case GateKind::Y:
        return kY;
      case GateKind::Z:
        return kZ;
      case GateKind::T:
        return {{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}};
      case GateKind::Tdg:
        return {{1, 0}, {0, std::polar(1.0, -std::numbers::pi / 4)}};
      default:
        throw std::invalid_argument("not a one-qubit gate");
    }
  };

  const std::size_t dim = std::size_t{1} << n;
  if (g.kind == GateKind::CX) {
    Mat m = zeros(dim);
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t cbit = (b >> (n - 1 - g.q0)) & 1;
      const std::size_t out = cbit ? b ^ (std::size_t{1} << (n - 1 - g.q1)) : b;
      m[out][b] = 1;
    }
    return m;
  }
  Mat m{{1}};
  for (std::size_t q = 0; q < n; ++q) {
    m = kron(m, q == g.q0 ? one_qubit(g.kind) : kI);
  }
  return m;
}

/// Conjugates the signed Pauli `row` by gate `g` using dense matrices and
/// recovers the resulting signed Pauli string by exhaustive search. Throws
/// if the result is not a signed Pauli string (i.e. g was not Clifford).
inline RowBits conjugate_pauli(const RowBits& row, const Gate& g) {
  const std::size_t n = row.x.size();
  const Mat u = gate_matrix(g, n);
  const Mat conj = matmul(matmul(u, pauli_matrix(row)), dagger(u));

  RowBits cand;
  cand.x.assign(n, false);
  cand.z.assign(n, false);
  const std::size_t strings = std::size_t{1} << (2 * n);
  for (std::size_t bits = 0; bits < strings; ++bits) {
    for (std::size_t q = 0; q < n; ++q) {
      cand.x[q] = (bits >> (2 * q)) & 1;
      cand.z[q] = (bits >> (2 * q + 1)) & 1;
    }
    for (bool sign : {false, true}) {
      cand.r = sign;
      if (approx_equal(conj, pauli_matrix(cand))) return cand;
    }
  }
  throw std::logic_error("conjugation result is not a signed Pauli string");
}

/// The (x, z, r) coordinates of tableau row k, for comparison with RowBits.
inline RowBits row_bits(const Tableau& t, std::size_t k) {
  RowBits out;
  out.x.resize(t.n());
  out.z.resize(t.n());
  for (std::size_t q = 0; q < t.n(); ++q) {
    out.x[q] = t.row(k).x(q);
    out.z[q] = t.row(k).z(q);
  }
  out.r = t.row(k).r();
  return out;
}

/// Dense unitary of a whole circuit (layer-major gate order).
inline Mat circuit_matrix(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.n();
  Mat u = zeros(dim);
  for (std::size_t i = 0; i < dim; ++i) u[i][i] = 1;
  for (const Gate& g : flatten(c)) u = matmul(gate_matrix(g, c.n()), u);
  return u;
}

/// Unitary equality modulo a global phase factor.
inline bool equal_up_to_global_phase(const Mat& a, const Mat& b,
                                     double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  std::size_t bi = 0, bj = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (std::abs(b[i][j]) > best) {
        best = std::abs(b[i][j]);
        bi = i;
        bj = j;
      }
    }
  }
  if (best < tol) return approx_equal(a, b, tol);
  const cd phase = a[bi][bj] / b[bi][bj];
  if (std::abs(std::abs(phase) - 1.0) > 1e-6) return false;
  Mat scaled = b;
  for (auto& row : scaled)
    for (auto& v : row) v *= phase;
  return approx_equal(a, scaled, tol);
}

}  // namespace cliffsynth::test
