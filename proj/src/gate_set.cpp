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

#include "cliffsynth/gate_set.hpp"

#include <stdexcept>

namespace cliffsynth {

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::I:
      return "id";
    case GateKind::H:
      return "h";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::X:
      return "x";
    case GateKind::Y:
      return "y";
    case GateKind::Z:
      return "z";
    case GateKind::CX:
      return "cx";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
  }
  throw std::invalid_argument("unknown gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "id") return GateKind::I;
  if (name == "h") return GateKind::H;
  if (name == "s") return GateKind::S;
  if (name == "sdg") return GateKind::Sdg;
  if (name == "x") return GateKind::X;
  if (name == "y") return GateKind::Y;
  if (name == "z") return GateKind::Z;
  if (name == "cx") return GateKind::CX;
  if (name == "t") return GateKind::T;
  if (name == "tdg") return GateKind::Tdg;
  throw std::invalid_argument("unknown gate name '" + name + "'");
}

}  // namespace cliffsynth
