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

#include "cliffsynth/partition.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "cliffsynth/errors.hpp"

namespace cliffsynth {

std::vector<Circuit> split_vertical(const Circuit& c, std::size_t s) {
  if (s == 0) {
    throw std::invalid_argument("vertical split size must be at least 1");
  }
  std::vector<Circuit> out;
  const auto& layers = c.layers();
  for (std::size_t begin = 0; begin < layers.size(); begin += s) {
    const std::size_t end = std::min(begin + s, layers.size());
    out.push_back(Circuit::from_layers(
        c.n(), {layers.begin() + static_cast<std::ptrdiff_t>(begin),
                layers.begin() + static_cast<std::ptrdiff_t>(end)}));
  }
  return out;
}

namespace {

/// Plain union-find over qubit indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

/// The sub-circuit of c induced by `qubits` (sorted original ids),
/// re-indexed to 0..qubits.size()-1 and keeping c's layer boundaries.
Circuit restrict_to(const Circuit& c, const std::vector<std::size_t>& qubits) {
  std::vector<std::size_t> position(c.n(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < qubits.size(); ++i) position[qubits[i]] = i;

  std::vector<Layer> layers;
  for (const Layer& layer : c.layers()) {
    Layer out;
    for (const Gate& g : layer.gates) {
      if (position[g.q0] == static_cast<std::size_t>(-1)) continue;
      Gate mapped = g;
      mapped.q0 = static_cast<std::uint32_t>(position[g.q0]);
      mapped.q1 = is_two_qubit(g.kind)
                      ? static_cast<std::uint32_t>(position[g.q1])
                      : mapped.q0;
      out.gates.push_back(mapped);
    }
    if (!out.gates.empty()) layers.push_back(std::move(out));
  }
  return Circuit::from_layers(qubits.size(), std::move(layers));
}

}  // namespace

std::vector<HorizontalBin> split_horizontal(const Circuit& c,
                                            std::size_t n_max) {
  if (n_max == 0) {
    throw std::invalid_argument("horizontal bin capacity must be at least 1");
  }

  DisjointSets sets(c.n());
  for (const Gate& g : flatten(c)) {
    if (is_two_qubit(g.kind)) sets.unite(g.q0, g.q1);
  }
  std::vector<std::vector<std::size_t>> components;
  {
    std::vector<std::size_t> index_of_root(c.n(), static_cast<std::size_t>(-1));
    for (std::size_t q = 0; q < c.n(); ++q) {
      const std::size_t root = sets.find(q);
      if (index_of_root[root] == static_cast<std::size_t>(-1)) {
        index_of_root[root] = components.size();
        components.emplace_back();
      }
      components[index_of_root[root]].push_back(q);
    }
  }
  // First-fit-decreasing; ties broken by lowest qubit id for determinism.
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });

  struct ProtoBin {
    std::vector<std::size_t> qubits;
    bool oversized = false;
  };
  std::vector<ProtoBin> bins;
  for (const auto& comp : components) {
    if (comp.size() > n_max) {
      bins.push_back({comp, true});
      continue;
    }
    bool placed = false;
    for (ProtoBin& bin : bins) {
      if (!bin.oversized && bin.qubits.size() + comp.size() <= n_max) {
        bin.qubits.insert(bin.qubits.end(), comp.begin(), comp.end());
        placed = true;
        break;
      }
    }
    if (!placed) bins.push_back({comp, false});
  }

  std::vector<HorizontalBin> out;
  for (ProtoBin& bin : bins) {
    std::sort(bin.qubits.begin(), bin.qubits.end());
    HorizontalBin h;
    h.qubits = bin.qubits;
    h.circuit = restrict_to(c, bin.qubits);
    h.oversized = bin.oversized;
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

bool is_t_like(GateKind k) { return k == GateKind::T || k == GateKind::Tdg; }

std::vector<std::size_t> support_of_layers(const std::vector<Layer>& layers) {
  std::set<std::size_t> used;
  for (const Layer& layer : layers) {
    for (const Gate& g : layer.gates) {
      used.insert(g.q0);
      if (is_two_qubit(g.kind)) used.insert(g.q1);
    }
  }
  return {used.begin(), used.end()};
}

}  // namespace

BlockPlan partition_clifford_t(const Circuit& c) {
  BlockPlan plan;
  plan.n = c.n();

  std::vector<Layer> pending;
  std::size_t pending_begin = 0;

  auto flush_clifford = [&](std::size_t end) {
    if (pending.empty()) return;
    Block b;
    b.kind = BlockKind::kClifford;
    b.qubits = support_of_layers(pending);
    b.layer_begin = pending_begin;
    b.layer_end = end;
    b.circuit = Circuit::from_layers(plan.n, std::move(pending));
    pending.clear();
    plan.blocks.push_back(std::move(b));
  };

  const auto& layers = c.layers();
  for (std::size_t i = 0; i < layers.size(); ++i) {
    Layer cliffords, ts;
    for (const Gate& g : layers[i].gates) {
      (is_t_like(g.kind) ? ts : cliffords).gates.push_back(g);
    }

    if (ts.gates.empty()) {
      if (pending.empty()) pending_begin = i;
      pending.push_back(std::move(cliffords));
      continue;
    }

    // Hoist co-layered Cliffords into the preceding Clifford block: safe
    // because they act on qubits disjoint from this layer's T gates.
    const bool hoisted = !cliffords.gates.empty();
    if (hoisted) {
      if (pending.empty()) pending_begin = i;
      pending.push_back(std::move(cliffords));
    }
    flush_clifford(hoisted ? i + 1 : i);

    if (!plan.blocks.empty() &&
        plan.blocks.back().kind == BlockKind::kTBarrier &&
        plan.blocks.back().layer_end == i) {
      // Extend the previous T block across an uninterrupted T run.
      Block& prev = plan.blocks.back();
      std::vector<Layer> merged = prev.circuit.layers();
      merged.push_back(std::move(ts));
      prev.qubits = support_of_layers(merged);
      prev.circuit = Circuit::from_layers(plan.n, std::move(merged));
      prev.layer_end = i + 1;
    } else {
      Block b;
      b.kind = BlockKind::kTBarrier;
      b.layer_begin = i;
      b.layer_end = i + 1;
      std::vector<Layer> only{std::move(ts)};
      b.qubits = support_of_layers(only);
      b.circuit = Circuit::from_layers(plan.n, std::move(only));
      plan.blocks.push_back(std::move(b));
    }
  }
  flush_clifford(layers.size());
  return plan;
}

Circuit concat_plan(const BlockPlan& plan) {
  Circuit out(plan.n);
  for (const Block& b : plan.blocks) out = concat(out, b.circuit);
  return out;
}

namespace {

/// Widens a bin-local circuit back onto the full register.
Circuit embed(const Circuit& local, const std::vector<std::size_t>& qubits,
              std::size_t n) {
  std::vector<Layer> layers;
  for (const Layer& layer : local.layers()) {
    Layer out;
    for (Gate g : layer.gates) {
      g.q0 = static_cast<std::uint32_t>(qubits[g.q0]);
      g.q1 = is_two_qubit(g.kind) ? static_cast<std::uint32_t>(qubits[g.q1])
                                  : g.q0;
      out.gates.push_back(g);
    }
    layers.push_back(std::move(out));
  }
  return Circuit::from_layers(n, std::move(layers));
}

/// Zips qubit-disjoint circuits over the same register in parallel:
/// layer j of the result is the union of every part's layer j.
Circuit merge_parallel(const std::vector<Circuit>& parts, std::size_t n) {
  std::size_t depth = 0;
  for (const Circuit& p : parts) depth = std::max(depth, p.depth());
  std::vector<Layer> layers(depth);
  for (const Circuit& p : parts) {
    for (std::size_t j = 0; j < p.depth(); ++j) {
      const auto& gates = p.layers()[j].gates;
      layers[j].gates.insert(layers[j].gates.end(), gates.begin(),
                             gates.end());
    }
  }
  return Circuit::from_layers(n, std::move(layers));
}

struct LeafTask {
  Circuit original;
  Circuit result;
};

void synthesize_leaf(LeafTask& task, const HeuristicConfig& cfg,
                     const SolverFactory& factory) {
  task.result = task.original;
  if (task.original.depth() == 0) return;

  SynthesisOptions options;
  options.strategy.kind = SearchKind::kLinearDown;
  options.strategy.upper_bound = task.original.depth();
  options.per_query_limits = cfg.per_query_limits;
  options.total_seconds_budget = cfg.per_leaf_seconds;
  try {
    const SynthesisReport report =
        synth_optimal(simulate(task.original), options, factory);
    // The leaf itself witnesses its own depth, so anything deeper (a
    // recovery climb after unanswered probes) is discarded.
    if (report.circuit.depth() <= task.original.depth()) {
      task.result = report.circuit;
    }
  } catch (const BudgetExhaustedError&) {
    // Keep the original leaf; a heuristic pass must not fail outright.
  }
}

void run_leaves(std::vector<LeafTask>& leaves, const HeuristicConfig& cfg,
                const SolverFactory& factory) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(cfg.workers, leaves.size()));
  if (workers == 1) {
    for (LeafTask& leaf : leaves) synthesize_leaf(leaf, cfg, factory);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < leaves.size();
             i = next.fetch_add(1)) {
          synthesize_leaf(leaves[i], cfg, factory);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

Circuit optimize_heuristic(const Circuit& c, const HeuristicConfig& cfg,
                           const SolverFactory& solver_factory) {
  if (cfg.split_size == 0) {
    throw std::invalid_argument("split size must be at least 1");
  }
  if (cfg.max_qubits < 2) {
    throw std::invalid_argument("max qubits must be at least 2");
  }
  if (cfg.split_size >= cfg.depth_threshold) {
    throw std::invalid_argument(
        "split size must be smaller than the depth threshold");
  }

  BlockPlan plan = partition_clifford_t(c);

  // Carve every Clifford block into leaves, remembering how to put the
  // pieces back: block -> bins (horizontal) -> slices (vertical).
  struct BinShape {
    std::vector<std::size_t> qubits;
    std::size_t first_leaf = 0;
    std::size_t num_slices = 0;
  };
  struct BlockShape {
    std::size_t block_index = 0;
    std::vector<BinShape> bins;
  };
  std::vector<BlockShape> shapes;
  std::vector<LeafTask> leaves;

  for (std::size_t bi = 0; bi < plan.blocks.size(); ++bi) {
    if (plan.blocks[bi].kind != BlockKind::kClifford) continue;
    BlockShape shape;
    shape.block_index = bi;
    for (HorizontalBin& bin :
         split_horizontal(plan.blocks[bi].circuit, cfg.max_qubits)) {
      BinShape bs;
      bs.qubits = std::move(bin.qubits);
      bs.first_leaf = leaves.size();
      std::vector<Circuit> slices;
      if (bin.circuit.depth() > cfg.depth_threshold) {
        slices = split_vertical(bin.circuit, cfg.split_size);
      } else {
        slices = {std::move(bin.circuit)};
      }
      bs.num_slices = slices.size();
      for (Circuit& slice : slices) {
        leaves.push_back({std::move(slice), Circuit{}});
      }
      shape.bins.push_back(std::move(bs));
    }
    shapes.push_back(std::move(shape));
  }

  run_leaves(leaves, cfg, solver_factory);

  for (const BlockShape& shape : shapes) {
    std::vector<Circuit> widened;
    for (const BinShape& bin : shape.bins) {
      Circuit rebuilt(bin.qubits.size());
      for (std::size_t j = 0; j < bin.num_slices; ++j) {
        rebuilt = concat(rebuilt, leaves[bin.first_leaf + j].result);
      }
      widened.push_back(embed(rebuilt, bin.qubits, plan.n));
    }
    Block& block = plan.blocks[shape.block_index];
    Circuit replacement = merge_parallel(widened, plan.n);
    if (!tableau_equal(simulate(replacement), simulate(block.circuit))) {
      throw InternalConsistencyError(
          "reassembled Clifford block does not match the original");
    }
    if (replacement.depth() <= block.circuit.depth()) {
      block.circuit = std::move(replacement);
    }
  }

  return layerize(plan.n, flatten(concat_plan(plan)));
}

Circuit optimize_heuristic(const Circuit& c, const HeuristicConfig& cfg) {
  return optimize_heuristic(c, cfg, internal_solver_factory());
}

}  // namespace cliffsynth
