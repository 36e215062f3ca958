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

#include "cliffsynth/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffsynth {

namespace {

void check_gate(std::size_t n, const Gate& g) {
  if (g.q0 >= n || g.q1 >= n) {
    throw std::invalid_argument("gate qubit index out of range for n=" +
                                std::to_string(n));
  }
  if (g.kind == GateKind::CX && g.q0 == g.q1) {
    throw std::invalid_argument("cx control and target must differ");
  }
  if (g.kind == GateKind::I) {
    throw std::invalid_argument("identity gates are not stored in circuits");
  }
}

}  // namespace

Circuit Circuit::from_layers(std::size_t n, std::vector<Layer> layers) {
  Circuit c(n);
  for (Layer& layer : layers) {
    if (layer.gates.empty()) continue;
    std::vector<bool> used(n, false);
    auto claim = [&used](std::uint32_t q) {
      if (used[q]) {
        throw std::invalid_argument("qubit " + std::to_string(q) +
                                    " used twice in one layer");
      }
      used[q] = true;
    };
    for (const Gate& g : layer.gates) {
      check_gate(n, g);
      claim(g.q0);
      if (is_two_qubit(g.kind)) claim(g.q1);
    }
    c.layers_.push_back(std::move(layer));
  }
  return c;
}

Circuit layerize(std::size_t n, const std::vector<Gate>& gates) {
  std::vector<std::size_t> avail(n, 0);  // earliest free layer per qubit
  std::vector<Layer> layers;
  for (const Gate& g : gates) {
    check_gate(n, g);
    const std::size_t at = std::max(avail[g.q0], avail[g.q1]);
    if (at == layers.size()) layers.emplace_back();
    layers[at].gates.push_back(g);
    avail[g.q0] = at + 1;
    avail[g.q1] = at + 1;
  }
  return Circuit::from_layers(n, std::move(layers));
}

std::vector<Gate> flatten(const Circuit& c) {
  std::vector<Gate> gates;
  for (const Layer& layer : c.layers()) {
    gates.insert(gates.end(), layer.gates.begin(), layer.gates.end());
  }
  return gates;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("cannot concatenate circuits of different n");
  }
  std::vector<Layer> layers = a.layers();
  layers.insert(layers.end(), b.layers().begin(), b.layers().end());
  return Circuit::from_layers(a.n(), std::move(layers));
}

CircuitMetrics metrics(const Circuit& c) {
  CircuitMetrics m;
  m.depth = c.depth();
  for (const Layer& layer : c.layers()) {
    m.gate_count += layer.gates.size();
    for (const Gate& g : layer.gates) {
      if (is_two_qubit(g.kind)) ++m.two_qubit_count;
    }
  }
  return m;
}

}  // namespace cliffsynth
