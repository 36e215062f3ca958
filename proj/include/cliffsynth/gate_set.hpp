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
#include <string>

namespace cliffsynth {

/// Gate alphabet understood by the circuit layer. Everything except T/Tdg is
/// Clifford; the tableau simulator rejects the last two.
enum class GateKind : std::uint8_t {
  I,
  H,
  S,
  Sdg,
  X,
  Y,
  Z,
  CX,
  T,
  Tdg,
};

inline bool is_two_qubit(GateKind k) { return k == GateKind::CX; }

inline bool is_clifford(GateKind k) {
  return k != GateKind::T && k != GateKind::Tdg;
}

/// Single-qubit Clifford kinds, in the order used by the SAT encoding.
/// Identity comes first so that "no gate here" is a first-class choice.
inline constexpr GateKind kSingleQubitCliffords[] = {
    GateKind::I, GateKind::H, GateKind::S,
    GateKind::Sdg, GateKind::X, GateKind::Y,
    GateKind::Z,
};
inline constexpr std::size_t kNumSingleQubitCliffords = 7;

std::string gate_name(GateKind k);

/// Inverse of gate_name; throws std::invalid_argument on unknown names.
GateKind gate_kind_from_name(const std::string& name);

}  // namespace cliffsynth
