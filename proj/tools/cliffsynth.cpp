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

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cliffsynth/circuit.hpp"
#include "cliffsynth/encoder.hpp"
#include "cliffsynth/errors.hpp"
#include "cliffsynth/partition.hpp"
#include "cliffsynth/satio.hpp"
#include "cliffsynth/search.hpp"
#include "cliffsynth/tableau.hpp"

namespace {

using namespace cliffsynth;

// Exit-code contract: scripts must be able to tell "slow" from "wrong".
constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInternal = 3;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error while reading " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("error while writing " + path);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

SolverFactory make_factory(const std::string& selector, std::uint64_t seed) {
  if (selector == "internal") return internal_solver_factory(seed);
  if (selector.rfind("exec:", 0) == 0) {
    const std::string path = selector.substr(5);
    if (path.empty()) {
      throw std::invalid_argument("--solver exec: needs a path after 'exec:'");
    }
    return subprocess_solver_factory(path);
  }
  throw std::invalid_argument("unknown solver '" + selector +
                              "' (expected 'internal' or 'exec:PATH')");
}

GateSet parse_gate_set(const std::string& csv) {
  if (csv.empty()) return GateSet::full_clifford();
  std::vector<GateKind> singles, pairs;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const GateKind k = gate_kind_from_name(item);
    (is_two_qubit(k) ? pairs : singles).push_back(k);
  }
  return GateSet(std::move(singles), std::move(pairs));
}

/// A synthesis target plus, when it came from a circuit, that circuit's
/// depth (a ready-made upper bound for downward search strategies).
struct TargetInput {
  Tableau target = Tableau::identity(1);
  std::optional<std::size_t> depth_bound;
};

TargetInput load_target(const std::string& tableau_path,
                        const std::string& circuit_path) {
  TargetInput in;
  if (!tableau_path.empty()) {
    in.target = Tableau::from_text(read_file(tableau_path));
  } else {
    const Circuit c = parse_circuit(read_file(circuit_path));
    in.target = simulate(c);
    in.depth_bound = c.depth();
  }
  return in;
}

/// Runs samples 0..count-1 over at most `jobs` threads; `body(i)` fills
/// the i-th result slot. Internal errors propagate to the caller.
void for_each_sample(std::size_t count, std::size_t jobs,
                     const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::max<std::size_t>(
      1, std::min(jobs, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count;
             i = next.fetch_add(1)) {
          body(i);
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

// ---------------------------------------------------------------------------
// synth

struct SynthOptions {
  std::string tableau_path;
  std::string circuit_path;
  std::string out_path;
  std::string gates_csv;
  SearchKind strategy = SearchKind::kLinearUp;
  double timeout = kInfinity;
  bool no_symmetry = false;
  bool best_effort = false;
  std::uint64_t seed = 0;
  std::string solver = "internal";
};

int cmd_synth(const SynthOptions& o) {
  const TargetInput in = load_target(o.tableau_path, o.circuit_path);

  SynthesisOptions options;
  options.gates = parse_gate_set(o.gates_csv);
  options.symmetry_breaking = !o.no_symmetry;
  options.strategy.kind = o.strategy;
  options.total_seconds_budget = o.timeout;
  if (o.strategy == SearchKind::kLinearDown ||
      o.strategy == SearchKind::kBinary) {
    if (!in.depth_bound) {
      throw std::invalid_argument(
          "this strategy needs a depth upper bound; pass the target as "
          "--circuit so its own depth can seed the search");
    }
    options.strategy.upper_bound = in.depth_bound;
  }

  SynthesisReport report;
  try {
    report = synth_optimal(in.target, options, make_factory(o.solver, o.seed));
  } catch (const BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  }

  if (!tableau_equal(simulate(report.circuit), in.target)) {
    std::cerr << "error: synthesized circuit fails re-verification\n";
    return kExitInternal;
  }

  const CircuitMetrics m = metrics(report.circuit);
  std::cout << "n: " << in.target.n() << "\n"
            << "optimal depth: " << report.optimal_depth << "\n"
            << "certified: " << (report.certified ? "true" : "false") << "\n"
            << "gates: " << m.gate_count << "\n"
            << "two-qubit gates: " << m.two_qubit_count << "\n"
            << "probes: " << report.log.size() << "\n"
            << "time: " << std::fixed << std::setprecision(3)
            << report.total_seconds << " s\n";

  const std::string text = emit_circuit(report.circuit);
  if (!o.out_path.empty()) {
    write_file(o.out_path, text);
  } else {
    std::cout << "\n" << text;
  }
  if (!report.certified && !o.best_effort) return kExitBudget;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeOptions {
  std::string circuit_path;
  std::string out_path;
  std::size_t split_depth = 6;
  std::size_t depth_threshold = 12;
  std::size_t max_qubits = 5;
  std::size_t jobs = 1;
  double timeout = kInfinity;
  std::uint64_t seed = 0;
  std::string solver = "internal";
};

int cmd_optimize(const OptimizeOptions& o) {
  const Circuit input = parse_circuit(read_file(o.circuit_path));

  HeuristicConfig cfg;
  cfg.split_size = o.split_depth;
  cfg.depth_threshold = o.depth_threshold;
  cfg.max_qubits = o.max_qubits;
  cfg.per_leaf_seconds = o.timeout;
  cfg.workers = o.jobs;

  const auto start = std::chrono::steady_clock::now();
  const Circuit out =
      optimize_heuristic(input, cfg, make_factory(o.solver, o.seed));
  const double secs = seconds_since(start);

  bool clifford_only = true;
  for (const Gate& g : flatten(input)) {
    clifford_only = clifford_only && is_clifford(g.kind);
  }
  if (clifford_only && !tableau_equal(simulate(out), simulate(input))) {
    std::cerr << "error: optimized circuit fails re-verification\n";
    return kExitInternal;
  }

  const CircuitMetrics before = metrics(input);
  const CircuitMetrics after = metrics(out);
  std::cout << "n: " << input.n() << "\n"
            << "input depth: " << before.depth << "\n"
            << "output depth: " << after.depth << "\n"
            << "input gates: " << before.gate_count << "\n"
            << "output gates: " << after.gate_count << "\n"
            << "time: " << std::fixed << std::setprecision(3) << secs
            << " s\n";

  const std::string text = emit_circuit(out);
  if (!o.out_path.empty()) {
    write_file(o.out_path, text);
  } else {
    std::cout << "\n" << text;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::vector<std::string> circuit_paths;
  std::string tableau_path;
};

std::string row_line(const Tableau& t, std::size_t k) {
  const std::string text = t.to_text();
  std::stringstream ss(text);
  std::string line;
  for (std::size_t i = 0; i <= k + 1; ++i) std::getline(ss, line);
  return line;
}

int cmd_verify(const VerifyOptions& o) {
  const std::size_t inputs =
      o.circuit_paths.size() + (o.tableau_path.empty() ? 0 : 1);
  if (inputs != 2) {
    throw std::invalid_argument(
        "verify needs exactly two inputs: two --circuit files, or one "
        "--circuit and one --tableau");
  }

  std::vector<Tableau> sides;
  std::vector<std::string> names;
  for (const std::string& path : o.circuit_paths) {
    try {
      sides.push_back(simulate(parse_circuit(read_file(path))));
    } catch (const NonCliffordGateError&) {
      std::cerr << "error: " << path
                << " contains T/Tdg; verify compares Clifford circuits "
                   "only\n";
      return kExitUserError;
    }
    names.push_back(path);
  }
  if (!o.tableau_path.empty()) {
    sides.push_back(Tableau::from_text(read_file(o.tableau_path)));
    names.push_back(o.tableau_path);
  }

  if (sides[0].n() != sides[1].n()) {
    std::cout << "equivalent: no\n"
              << "qubit count mismatch: " << sides[0].n() << " vs "
              << sides[1].n() << "\n";
    return kExitUserError;
  }
  if (tableau_equal(sides[0], sides[1])) {
    std::cout << "equivalent: yes\n";
    return kExitOk;
  }
  const std::size_t n = sides[0].n();
  for (std::size_t k = 0; k < 2 * n; ++k) {
    if (sides[0].row(k) == sides[1].row(k)) continue;
    std::cout << "equivalent: no\n"
              << "first differing row: " << k << " ("
              << (k < n ? "destabilizer " : "stabilizer ")
              << (k < n ? k : k - n) << ")\n"
              << "  " << names[0] << ": " << row_line(sides[0], k) << "\n"
              << "  " << names[1] << ": " << row_line(sides[1], k) << "\n";
    break;
  }
  return kExitUserError;
}

// ---------------------------------------------------------------------------
// encode

struct EncodeOptions {
  std::string tableau_path;
  std::string circuit_path;
  std::size_t depth = 0;
  std::string gates_csv;
  bool no_symmetry = false;
  std::string dimacs_path;
  std::string map_path;
};

std::string variable_map(const VariableLayout& layout) {
  std::ostringstream out;
  const std::size_t n = layout.n();
  const std::size_t d_max = layout.d_max();
  out << "n " << n << "\n";
  out << "d_max " << d_max << "\n";
  for (std::size_t d = 0; d < d_max; ++d) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t g = 0; g < layout.gates().single_qubit().size(); ++g) {
        out << "single " << d << " " << q << " "
            << gate_name(layout.gates().single_qubit()[g]) << " "
            << layout.single_gate_var(g, q, d) << "\n";
      }
    }
    for (std::size_t g = 0; g < layout.gates().two_qubit().size(); ++g) {
      for (std::size_t q0 = 0; q0 < n; ++q0) {
        for (std::size_t q1 = 0; q1 < n; ++q1) {
          if (q0 == q1) continue;
          out << "pair " << d << " " << q0 << " " << q1 << " "
              << layout.two_gate_var(g, q0, q1, d) << "\n";
        }
      }
    }
  }
  for (std::size_t step = 0; step <= d_max; ++step) {
    for (std::size_t k = 0; k < 2 * n; ++k) {
      for (std::size_t q = 0; q < n; ++q) {
        out << "x " << k << " " << q << " " << step << " "
            << layout.x_var(q, k, step) << "\n";
        out << "z " << k << " " << q << " " << step << " "
            << layout.z_var(q, k, step) << "\n";
      }
      out << "r " << k << " " << step << " " << layout.r_var(k, step) << "\n";
    }
  }
  const std::size_t named = layout.single_gate_var_count() +
                            layout.two_gate_var_count() +
                            layout.tableau_var_count();
  out << "aux " << named + 1 << " " << layout.aux_var_count() << "\n";
  return out.str();
}

int cmd_encode(const EncodeOptions& o) {
  const TargetInput in = load_target(o.tableau_path, o.circuit_path);
  const GateSet gates = parse_gate_set(o.gates_csv);
  const CnfInstance inst =
      build_encoding(in.target, o.depth, gates, !o.no_symmetry);

  const EncodingStats stats = inst.stats();
  std::cerr << "variables: " << stats.total_vars << " (gate "
            << stats.single_gate_vars + stats.two_gate_vars << ", tableau "
            << stats.tableau_vars << ", aux " << stats.aux_vars
            << "), clauses: " << stats.clauses << "\n";

  const std::string dimacs = export_dimacs(inst);
  if (o.dimacs_path.empty()) {
    std::cout << dimacs;
    if (!o.map_path.empty()) write_file(o.map_path, variable_map(inst.layout));
  } else {
    write_file(o.dimacs_path, dimacs);
    const std::string map_path =
        o.map_path.empty() ? o.dimacs_path + ".map" : o.map_path;
    write_file(map_path, variable_map(inst.layout));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// random

struct RandomOptions {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_random(const RandomOptions& o) {
  const std::string text = random_tableau(o.n, o.seed).to_text();
  if (o.out_path.empty()) {
    std::cout << text;
  } else {
    write_file(o.out_path, text);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

enum class BenchMethod { kOptimal, kVertical, kHorizontal };

const char* method_name(BenchMethod m) {
  switch (m) {
    case BenchMethod::kOptimal:
      return "optimal";
    case BenchMethod::kVertical:
      return "heuristic-vertical";
    default:
      return "heuristic-horizontal";
  }
}

struct BenchOptions {
  std::string range = "2..3";
  std::size_t samples = 10;
  std::vector<BenchMethod> methods;
  std::uint64_t seed = 0;
  double timeout = kInfinity;
  std::size_t jobs = 1;
  std::string solver = "internal";
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto parse_one = [](const std::string& s) {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad count '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t v = parse_one(text);
      return {v, v};
    }
    const std::size_t lo = parse_one(text.substr(0, dots));
    const std::size_t hi = parse_one(text.substr(dots + 2));
    if (lo == 0 || lo > hi) {
      throw std::invalid_argument("empty range");
    }
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("--n expects a qubit count or range like "
                                "'2..4', got '" +
                                text + "'");
  }
}

/// Deterministic Clifford circuit used as heuristic benchmark input:
/// 6·n² random gates, layerized.
Circuit bench_input_circuit(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Gate> gates;
  static constexpr GateKind kinds[] = {GateKind::H, GateKind::S,
                                       GateKind::Sdg, GateKind::X,
                                       GateKind::Y, GateKind::Z};
  for (std::size_t i = 0; i < 6 * n * n; ++i) {
    if (n >= 2 && rng() % 3 == 0) {
      auto c = static_cast<std::uint32_t>(rng() % n);
      auto t = static_cast<std::uint32_t>(rng() % (n - 1));
      if (t >= c) ++t;
      gates.push_back(Gate::cx(c, t));
    } else {
      gates.push_back(Gate::single(kinds[rng() % 6],
                                   static_cast<std::uint32_t>(rng() % n)));
    }
  }
  return layerize(n, gates);
}

struct SampleResult {
  bool ok = false;
  std::size_t depth = 0;
  std::size_t gates = 0;
  double secs = 0.0;
  bool timed_out = false;
};

SampleResult run_sample(std::size_t n, BenchMethod method,
                        std::uint64_t sample_seed, const BenchOptions& o) {
  SampleResult res;
  const auto start = std::chrono::steady_clock::now();
  if (method == BenchMethod::kOptimal) {
    SynthesisOptions options;
    options.total_seconds_budget = o.timeout;
    try {
      const SynthesisReport report =
          synth_optimal(random_tableau(n, sample_seed), options,
                        make_factory(o.solver, sample_seed));
      res.ok = report.certified;
      res.timed_out = !report.certified;
      res.depth = report.optimal_depth;
      res.gates = metrics(report.circuit).gate_count;
    } catch (const BudgetExhaustedError&) {
      res.timed_out = true;
    }
    res.secs = seconds_since(start);
    return res;
  }

  const Circuit input = bench_input_circuit(n, sample_seed);
  HeuristicConfig cfg;
  cfg.per_leaf_seconds = o.timeout;
  if (method == BenchMethod::kVertical) {
    // Depth-wise slicing only: the whole register stays in one bin.
    cfg.max_qubits = std::max<std::size_t>(2, n);
    cfg.split_size = 6;
    cfg.depth_threshold = 7;
  } else {
    // Qubit-wise binning only: blocks are never sliced.
    cfg.max_qubits = 5;
    cfg.split_size = 6;
    cfg.depth_threshold = static_cast<std::size_t>(-1);
  }
  const Circuit out =
      optimize_heuristic(input, cfg, make_factory(o.solver, sample_seed));
  res.secs = seconds_since(start);
  res.ok = true;
  res.timed_out = std::isfinite(o.timeout) && res.secs > o.timeout;
  res.depth = out.depth();
  res.gates = metrics(out).gate_count;
  return res;
}

int cmd_bench(const BenchOptions& o) {
  const auto [lo, hi] = parse_range(o.range);
  if (o.samples == 0) throw std::invalid_argument("--samples must be >= 1");
  std::vector<BenchMethod> methods = o.methods;
  if (methods.empty()) methods.push_back(BenchMethod::kOptimal);

  std::cout << "n,d,gates,t,method,samples,seed,timeouts\n";
  for (std::size_t n = lo; n <= hi; ++n) {
    for (const BenchMethod method : methods) {
      std::vector<SampleResult> results(o.samples);
      for_each_sample(o.samples, o.jobs, [&](std::size_t i) {
        const std::uint64_t sample_seed =
            mix64(o.seed ^ mix64(n * 1000003ull + i));
        results[i] = run_sample(n, method, sample_seed, o);
      });

      std::size_t ok = 0, timeouts = 0;
      double sum_d = 0, sum_g = 0, sum_t = 0;
      for (const SampleResult& r : results) {
        timeouts += r.timed_out;
        if (!r.ok) continue;
        ++ok;
        sum_d += static_cast<double>(r.depth);
        sum_g += static_cast<double>(r.gates);
        sum_t += r.secs;
      }
      std::cout << n << ",";
      if (ok == 0) {
        std::cout << "nan,nan,nan";
      } else {
        const auto k = static_cast<double>(ok);
        std::cout << std::fixed << std::setprecision(4) << sum_d / k << ","
                  << sum_g / k << "," << std::setprecision(3) << sum_t / k;
      }
      std::cout << "," << method_name(method) << "," << o.samples << ","
                << o.seed << "," << timeouts << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cliffsynth: depth-optimal Clifford circuit synthesis via SAT"};
  app.require_subcommand(1);

  const std::map<std::string, SearchKind> strategy_names{
      {"linear-up", SearchKind::kLinearUp},
      {"linear-down", SearchKind::kLinearDown},
      {"binary", SearchKind::kBinary},
      {"geometric", SearchKind::kGeometricThenBinary}};
  const std::map<std::string, BenchMethod> method_names{
      {"optimal", BenchMethod::kOptimal},
      {"heuristic-vertical", BenchMethod::kVertical},
      {"heuristic-horizontal", BenchMethod::kHorizontal}};

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand(
      "synth", "Synthesize a depth-optimal circuit for a target");
  auto* synth_tab =
      synth_cmd->add_option("--tableau", synth.tableau_path,
                            "Target as a tableau text file")
          ->envname("CLIFFSYNTH_TABLEAU");
  auto* synth_circ =
      synth_cmd->add_option("--circuit", synth.circuit_path,
                            "Target as a circuit file (simulated first)")
          ->envname("CLIFFSYNTH_CIRCUIT");
  synth_tab->excludes(synth_circ);
  synth_cmd->add_option("--out", synth.out_path,
                        "Write the synthesized circuit here");
  synth_cmd->add_option("--gates", synth.gates_csv,
                        "Comma-separated gate alphabet (default: full "
                        "Clifford)");
  synth_cmd
      ->add_option("--strategy", synth.strategy,
                   "Depth search schedule (default linear-up)")
      ->transform(CLI::CheckedTransformer(strategy_names))
      ->envname("CLIFFSYNTH_STRATEGY");
  synth_cmd
      ->add_option("--timeout", synth.timeout,
                   "Wall-clock budget in seconds for the whole search")
      ->envname("CLIFFSYNTH_TIMEOUT");
  synth_cmd->add_flag("--no-symmetry", synth.no_symmetry,
                      "Disable symmetry-breaking clauses");
  synth_cmd->add_flag("--best-effort", synth.best_effort,
                      "Exit 0 even when the result is uncertified");
  synth_cmd->add_option("--seed", synth.seed, "Solver seed")
      ->envname("CLIFFSYNTH_SEED");
  synth_cmd
      ->add_option("--solver", synth.solver,
                   "SAT backend: 'internal' or 'exec:PATH'")
      ->envname("CLIFFSYNTH_SOLVER");

  OptimizeOptions opt;
  auto* opt_cmd = app.add_subcommand(
      "optimize", "Depth-optimize the Clifford regions of a circuit");
  opt_cmd->add_option("--circuit", opt.circuit_path, "Input circuit file")
      ->required()
      ->envname("CLIFFSYNTH_CIRCUIT");
  opt_cmd->add_option("--out", opt.out_path, "Write the optimized circuit");
  opt_cmd
      ->add_option("--split-depth", opt.split_depth,
                   "Vertical slice size in layers")
      ->envname("CLIFFSYNTH_SPLIT_DEPTH");
  opt_cmd
      ->add_option("--depth-threshold", opt.depth_threshold,
                   "Only slice blocks deeper than this")
      ->envname("CLIFFSYNTH_DEPTH_THRESHOLD");
  opt_cmd
      ->add_option("--max-qubits", opt.max_qubits,
                   "Horizontal bin capacity in qubits")
      ->envname("CLIFFSYNTH_MAX_QUBITS");
  opt_cmd->add_option("--jobs", opt.jobs, "Parallel leaf searches")
      ->envname("CLIFFSYNTH_JOBS");
  opt_cmd
      ->add_option("--timeout", opt.timeout,
                   "Per-leaf budget in seconds (expired leaves stay "
                   "unmodified)")
      ->envname("CLIFFSYNTH_TIMEOUT");
  opt_cmd->add_option("--seed", opt.seed, "Solver seed")
      ->envname("CLIFFSYNTH_SEED");
  opt_cmd
      ->add_option("--solver", opt.solver,
                   "SAT backend: 'internal' or 'exec:PATH'")
      ->envname("CLIFFSYNTH_SOLVER");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check two Clifford circuits (or circuit vs. tableau) for "
                "equivalence");
  verify_cmd
      ->add_option("--circuit", verify.circuit_paths,
                   "Circuit file (repeat for two circuits)")
      ->expected(1, 2);
  verify_cmd->add_option("--tableau", verify.tableau_path,
                         "Tableau text file to compare against");

  EncodeOptions encode;
  auto* encode_cmd = app.add_subcommand(
      "encode", "Emit the bounded-depth DIMACS encoding plus a variable map");
  auto* encode_tab = encode_cmd->add_option(
      "--tableau", encode.tableau_path, "Target as a tableau text file");
  auto* encode_circ = encode_cmd->add_option(
      "--circuit", encode.circuit_path, "Target as a circuit file");
  encode_tab->excludes(encode_circ);
  encode_cmd->add_option("--depth", encode.depth, "Layer budget d_max")
      ->required();
  encode_cmd->add_option("--gates", encode.gates_csv,
                         "Comma-separated gate alphabet");
  encode_cmd->add_flag("--no-symmetry", encode.no_symmetry,
                       "Disable symmetry-breaking clauses");
  encode_cmd->add_option("--dimacs", encode.dimacs_path,
                         "DIMACS output file (default stdout)");
  encode_cmd->add_option("--map", encode.map_path,
                         "Variable-map sidecar (default: DIMACS file + "
                         "'.map')");

  RandomOptions random;
  auto* random_cmd =
      app.add_subcommand("random", "Emit a pseudo-random Clifford tableau");
  random_cmd->add_option("--n", random.n, "Number of qubits")
      ->required()
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", random.seed, "Sampler seed")
      ->envname("CLIFFSYNTH_SEED");
  random_cmd->add_option("--out", random.out_path,
                         "Output file (default stdout)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Run the benchmark sweep and emit CSV on stdout");
  bench_cmd->add_option("--n", bench.range, "Qubit count or range like 2..4")
      ->required();
  bench_cmd->add_option("--samples", bench.samples, "Samples per (n, method)")
      ->envname("CLIFFSYNTH_SAMPLES");
  bench_cmd
      ->add_option("--method", bench.methods,
                   "optimal | heuristic-vertical | heuristic-horizontal "
                   "(repeatable)")
      ->transform(CLI::CheckedTransformer(method_names));
  bench_cmd->add_option("--seed", bench.seed, "Base seed")
      ->envname("CLIFFSYNTH_SEED");
  bench_cmd
      ->add_option("--timeout", bench.timeout,
                   "Per-sample budget in seconds")
      ->envname("CLIFFSYNTH_TIMEOUT");
  bench_cmd->add_option("--jobs", bench.jobs, "Concurrent samples")
      ->envname("CLIFFSYNTH_JOBS");
  bench_cmd
      ->add_option("--solver", bench.solver,
                   "SAT backend: 'internal' or 'exec:PATH'")
      ->envname("CLIFFSYNTH_SOLVER");

  int rc = kExitOk;
  synth_cmd->callback([&] {
    if (synth.tableau_path.empty() && synth.circuit_path.empty()) {
      throw std::invalid_argument("synth needs --tableau or --circuit");
    }
    rc = cmd_synth(synth);
  });
  opt_cmd->callback([&] { rc = cmd_optimize(opt); });
  verify_cmd->callback([&] { rc = cmd_verify(verify); });
  encode_cmd->callback([&] {
    if (encode.tableau_path.empty() && encode.circuit_path.empty()) {
      throw std::invalid_argument("encode needs --tableau or --circuit");
    }
    rc = cmd_encode(encode);
  });
  random_cmd->callback([&] { rc = cmd_random(random); });
  bench_cmd->callback([&] { rc = cmd_bench(bench); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUserError;
  } catch (const BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DecodeVerificationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return rc;
}
