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
#include <string>
#include <vector>

#include "cliffsynth/tableau.hpp"

namespace cliffsynth {

/// One circuit time step: gates acting on pairwise-disjoint qubits.
/// Identity gates are never stored.
struct Layer {
  std::vector<Gate> gates;

  bool operator==(const Layer&) const = default;
};

/// A layered quantum circuit over n qubits.
///
/// The layer list is whatever the producer supplied; it is not re-packed on
/// construction, so a Circuit can faithfully carry a schedule that is not
/// as-soon-as-possible (vertical slices of a larger circuit, for instance).
/// Use layerize() to obtain the canonical ASAP schedule of a gate stream.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n) : n_(n) {}

  /// Validates per-layer qubit disjointness and index ranges, drops empty
  /// layers, and keeps the remaining layer boundaries exactly as given.
  static Circuit from_layers(std::size_t n, std::vector<Layer> layers);

  std::size_t n() const { return n_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t depth() const { return layers_.size(); }

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Layer> layers_;
};

/// Schedules a gate stream as soon as possible: each gate lands in the
/// earliest layer after every earlier gate that shares one of its qubits.
/// The result has minimal depth among all schedules preserving the given
/// per-qubit gate order.
Circuit layerize(std::size_t n, const std::vector<Gate>& gates);

/// Gates of c in layer-major order.
std::vector<Gate> flatten(const Circuit& c);

/// Sequential composition. Concatenates the layer lists as-is; callers
/// wanting a re-packed schedule should layerize(flatten(...)) the result.
Circuit concat(const Circuit& a, const Circuit& b);

struct CircuitMetrics {
  std::size_t depth = 0;
  std::size_t gate_count = 0;
  std::size_t two_qubit_count = 0;

  bool operator==(const CircuitMetrics&) const = default;
};

CircuitMetrics metrics(const Circuit& c);

/// Parses the OpenQASM-2 subset described in the README: one qreg, the
/// gates id/h/s/sdg/x/y/z/cx/t/tdg, line comments. Gates are scheduled
/// ASAP in source order. Throws ParseError with a 1-based position.
Circuit parse_circuit(const std::string& text);

/// Emits OpenQASM 2 that parse_circuit reads back with identical layers
/// (round-trip identity holds for ASAP-scheduled circuits).
std::string emit_circuit(const Circuit& c);

}  // namespace cliffsynth
