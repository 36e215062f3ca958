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
#include <limits>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/search.hpp"

namespace cliffsynth {

/// Cuts c into consecutive layer ranges of s layers each; the last block
/// keeps whatever remains. Concatenating the blocks reproduces c
/// layer-for-layer.
std::vector<Circuit> split_vertical(const Circuit& c, std::size_t s);

/// One qubit-disjoint partition cell from split_horizontal. `qubits` lists
/// the original qubit ids in increasing order; `circuit` is expressed over
/// the compacted indices 0..qubits.size()-1 (index i plays original qubit
/// qubits[i]). A bin holding a single interaction component larger than
/// n_max is flagged oversized; callers fall back to vertical splitting.
struct HorizontalBin {
  std::vector<std::size_t> qubits;
  Circuit circuit;
  bool oversized = false;
};

/// Splits along the qubit axis: connected components of the interaction
/// graph (edges = two-qubit gates anywhere in c) are packed whole into
/// bins of at most n_max qubits by first-fit-decreasing. Every qubit lands
/// in exactly one bin and no two-qubit gate crosses bins.
std::vector<HorizontalBin> split_horizontal(const Circuit& c,
                                            std::size_t n_max);

enum class BlockKind { kClifford, kTBarrier };

/// One element of a Clifford/T partition. `qubits` is the support of the
/// block's gates; `layer_begin`/`layer_end` delimit the source layers the
/// gates came from (half-open, informational — hoisting can make ranges
/// of neighbouring blocks touch). The circuit spans the full register.
struct Block {
  BlockKind kind = BlockKind::kClifford;
  std::vector<std::size_t> qubits;
  std::size_t layer_begin = 0;
  std::size_t layer_end = 0;
  Circuit circuit;
};

/// An ordered tiling of a circuit: every input gate sits in exactly one
/// block, per-qubit gate order is preserved, Clifford and T blocks
/// alternate, and T blocks hold only T/Tdg gates.
struct BlockPlan {
  std::size_t n = 0;
  std::vector<Block> blocks;
};

/// Tiles c into alternating Clifford and T blocks. Layers made up of
/// Clifford gates only extend the current Clifford block; a layer
/// containing T/Tdg becomes a T block, and any Clifford gates sharing that
/// layer are hoisted into the preceding Clifford block (which is created
/// on the spot if necessary — hoisting within a layer is always safe
/// because co-layered gates act on disjoint qubits).
BlockPlan partition_clifford_t(const Circuit& c);

/// Flattens a plan back into one circuit, blocks in order; the result's
/// per-qubit gate sequences equal the input's.
Circuit concat_plan(const BlockPlan& plan);

/// Tuning knobs for optimize_heuristic.
struct HeuristicConfig {
  /// Vertical split size in layers, applied to bins deeper than
  /// depth_threshold. Must satisfy 1 <= split_size < depth_threshold.
  std::size_t split_size = 6;
  std::size_t depth_threshold = 12;
  /// Horizontal bin capacity; at least 2.
  std::size_t max_qubits = 5;
  /// Per depth query inside each leaf search.
  SolveLimits per_query_limits;
  /// Wall-clock budget for one leaf's whole search; a leaf that exhausts
  /// it is kept in its original form.
  double per_leaf_seconds = std::numeric_limits<double>::infinity();
  /// Worker threads for leaf synthesis (leaves are independent).
  std::size_t workers = 1;
};

/// Depth-optimizes every Clifford region of c: partitions into
/// Clifford/T blocks, splits Clifford blocks horizontally into bins of at
/// most max_qubits and vertically into slices of split_size layers when
/// deeper than depth_threshold, synthesizes each leaf depth-optimally
/// (downward from the leaf's own depth), and reassembles in order.
/// Leaves whose search fails inside the budget are kept unmodified, so
/// the result never gets deeper than the input.
Circuit optimize_heuristic(const Circuit& c, const HeuristicConfig& cfg,
                           const SolverFactory& solver_factory);

Circuit optimize_heuristic(const Circuit& c, const HeuristicConfig& cfg);

}  // namespace cliffsynth
