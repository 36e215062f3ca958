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

#include "cliffsynth/search.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "cliffsynth/errors.hpp"

namespace cliffsynth {

DepthQueryResult synth_at_depth(const Tableau& target, std::size_t d,
                                const GateSet& gates, bool symmetry,
                                SatSolver& solver, const SolveLimits& limits) {
  const CnfInstance instance = build_encoding(target, d, gates, symmetry);
  const SatOutcome outcome = solver.solve(instance, limits);
  DepthQueryResult res;
  res.status = outcome.status;
  res.stats = outcome.stats;
  if (outcome.status == SatStatus::kSat) {
    res.circuit = decode_model(instance.layout, outcome.model, target);
  }
  return res;
}

namespace {

/// Shared plumbing for the strategies: budget accounting, probe logging,
/// and best-circuit tracking.
class SearchDriver {
 public:
  SearchDriver(const Tableau& target, const SynthesisOptions& options,
               const SolverFactory& factory)
      : target_(target),
        options_(options),
        factory_(factory),
        start_(std::chrono::steady_clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  /// Runs one depth query within the remaining budget and logs it.
  SatStatus query(std::size_t d) {
    SolveLimits limits = options_.per_query_limits;
    const double remaining = options_.total_seconds_budget - elapsed();
    if (remaining <= 0) {
      log_.push_back({d, SatStatus::kUnknown, {}});
      return SatStatus::kUnknown;
    }
    limits.max_seconds = std::min(limits.max_seconds, remaining);

    const std::unique_ptr<SatSolver> solver = factory_();
    const DepthQueryResult r = synth_at_depth(
        target_, d, options_.gates, options_.symmetry_breaking, *solver,
        limits);
    log_.push_back({d, r.status, r.stats});
    if (r.status == SatStatus::kSat) {
      if (!best_ || r.circuit->depth() < best_->depth()) best_ = r.circuit;
    }
    return r.status;
  }

  bool has_unsat_at(std::size_t d) const {
    return std::any_of(log_.begin(), log_.end(), [d](const DepthProbe& p) {
      return p.depth == d && p.status == SatStatus::kUnsat;
    });
  }

  const std::optional<Circuit>& best() const { return best_; }

  SynthesisReport finish() {
    if (!best_) {
      throw BudgetExhaustedError(
          "no circuit found for the target within the search budget");
    }
    SynthesisReport report;
    report.circuit = *best_;
    report.optimal_depth = best_->depth();
    // The decoded circuit is the certificate's SAT half; the UNSAT half
    // must be on record one depth below. Depth 1 is special-cased: the
    // depth-0 instance is a unit-clause conflict, so materializing its
    // refutation costs nothing.
    if (report.optimal_depth == 1 && !has_unsat_at(0)) query(0);
    report.certified =
        report.optimal_depth == 0 || has_unsat_at(report.optimal_depth - 1);
    report.log = std::move(log_);
    report.total_seconds = elapsed();
    if (!tableau_equal(simulate(report.circuit), target_)) {
      throw DecodeVerificationError(
          "synthesized circuit does not reproduce the target");
    }
    return report;
  }

 private:
  const Tableau& target_;
  const SynthesisOptions& options_;
  const SolverFactory& factory_;
  std::chrono::steady_clock::time_point start_;
  std::vector<DepthProbe> log_;
  std::optional<Circuit> best_;
};

// A Clifford circuit over the full gate set never needs more layers than
// this; used only to catch runaway searches, not as a tight bound.
std::size_t depth_safety_cap(std::size_t n) { return 16 * n + 16; }

}  // namespace

SynthesisReport synth_optimal(const Tableau& target,
                              const SynthesisOptions& options,
                              const SolverFactory& solver_factory) {
  SearchDriver driver(target, options, solver_factory);

  if (tableau_equal(target, Tableau::identity(target.n()))) {
    SynthesisReport report;
    report.circuit = Circuit(target.n());
    report.optimal_depth = 0;
    report.certified = true;
    report.total_seconds = driver.elapsed();
    return report;
  }

  const std::size_t cap = depth_safety_cap(target.n());
  const SearchStrategy& strategy = options.strategy;

  auto climb_until_sat = [&](std::size_t from) -> std::size_t {
    // Returns the first depth >= from with a SAT verdict.
    for (std::size_t d = from; d <= cap; ++d) {
      if (driver.query(d) == SatStatus::kSat) return d;
    }
    throw BudgetExhaustedError(
        "no satisfiable depth found up to the safety cap of " +
        std::to_string(cap));
  };

  switch (strategy.kind) {
    case SearchKind::kLinearUp: {
      climb_until_sat(1);
      break;
    }

    case SearchKind::kLinearDown: {
      if (!strategy.upper_bound) {
        throw std::invalid_argument(
            "linear-down search requires an upper bound");
      }
      std::size_t d = std::max<std::size_t>(*strategy.upper_bound, 1);
      SatStatus s = driver.query(d);
      if (s != SatStatus::kSat) {
        // The promised upper bound did not pan out; recover upward.
        climb_until_sat(d + 1);
      }
      while (driver.best() && driver.best()->depth() > 0) {
        const std::size_t next = driver.best()->depth() - 1;
        const SatStatus verdict = driver.query(next);
        if (verdict != SatStatus::kSat) break;  // UNSAT certifies; UNKNOWN ends
      }
      break;
    }

    case SearchKind::kBinary:
    case SearchKind::kGeometricThenBinary: {
      // Establish lo (largest recorded UNSAT; -1 = none) and hi (a SAT
      // depth with witness).
      std::ptrdiff_t lo = -1;
      std::size_t hi;
      if (strategy.kind == SearchKind::kBinary) {
        if (!strategy.upper_bound) {
          throw std::invalid_argument("binary search requires an upper bound");
        }
        const std::size_t ub = std::max<std::size_t>(*strategy.upper_bound, 1);
        const SatStatus s = driver.query(ub);
        if (s == SatStatus::kSat) {
          hi = driver.best()->depth();
        } else {
          if (s == SatStatus::kUnsat) lo = static_cast<std::ptrdiff_t>(ub);
          climb_until_sat(ub + 1);
          hi = driver.best()->depth();
        }
      } else {
        std::size_t guess = std::max<std::size_t>(
            strategy.initial_guess.value_or(1), 1);
        for (;;) {
          if (guess > cap) {
            throw BudgetExhaustedError(
                "geometric probing exceeded the safety cap of " +
                std::to_string(cap));
          }
          const SatStatus s = driver.query(guess);
          if (s == SatStatus::kSat) break;
          if (s == SatStatus::kUnsat) lo = static_cast<std::ptrdiff_t>(guess);
          guess *= 2;
        }
        hi = driver.best()->depth();
      }

      while (static_cast<std::ptrdiff_t>(hi) - lo > 1) {
        const std::size_t mid =
            static_cast<std::size_t>((static_cast<std::ptrdiff_t>(hi) + lo) / 2);
        const SatStatus s = driver.query(mid);
        if (s == SatStatus::kSat) {
          hi = driver.best()->depth();
        } else if (s == SatStatus::kUnsat) {
          lo = static_cast<std::ptrdiff_t>(mid);
        } else {
          break;  // cannot shrink the interval under a fired limit
        }
      }
      break;
    }
  }

  return driver.finish();
}

namespace {

void enumerate_layers(std::size_t n, const GateSet& gates, std::size_t q,
                      std::vector<bool>& used, std::vector<Gate>& current,
                      std::vector<std::vector<Gate>>& out) {
  while (q < n && used[q]) ++q;
  if (q == n) {
    if (!current.empty()) out.push_back(current);
    return;
  }
  used[q] = true;

  // Idle or single-qubit gate on q.
  enumerate_layers(n, gates, q + 1, used, current, out);
  for (GateKind k : gates.single_qubit()) {
    if (k == GateKind::I) continue;
    current.push_back(Gate::single(k, static_cast<std::uint32_t>(q)));
    enumerate_layers(n, gates, q + 1, used, current, out);
    current.pop_back();
  }
  // Pair q with any later free qubit, in both orientations. Processing
  // always picks the lowest free qubit, so each layer arises exactly once.
  for (std::size_t p = q + 1; p < n; ++p) {
    if (used[p]) continue;
    used[p] = true;
    for (GateKind k : gates.two_qubit()) {
      (void)k;  // only CX exists; orientation covers both directions
      for (auto [c, t] : {std::pair{q, p}, std::pair{p, q}}) {
        current.push_back(Gate::cx(static_cast<std::uint32_t>(c),
                                   static_cast<std::uint32_t>(t)));
        enumerate_layers(n, gates, q + 1, used, current, out);
        current.pop_back();
      }
    }
    used[p] = false;
  }
  used[q] = false;
}

std::vector<std::vector<Gate>> all_layers(std::size_t n,
                                          const GateSet& gates) {
  std::vector<std::vector<Gate>> out;
  std::vector<bool> used(n, false);
  std::vector<Gate> current;
  enumerate_layers(n, gates, 0, used, current, out);
  return out;
}

void check_enumeration_guard(std::size_t n, std::size_t d_cap) {
  if (n > 3 || d_cap > 4) {
    throw std::invalid_argument(
        "exhaustive enumeration is limited to n <= 3 and depth cap <= 4");
  }
}

}  // namespace

std::vector<std::vector<Tableau>> enumerate_reachable_tableaus(
    std::size_t n, const GateSet& gates, std::size_t d_cap) {
  check_enumeration_guard(n, d_cap);
  const std::vector<std::vector<Gate>> layers = all_layers(n, gates);

  std::vector<std::vector<Tableau>> levels;
  std::unordered_map<Tableau, std::size_t, TableauHash> seen;
  levels.push_back({Tableau::identity(n)});
  seen.emplace(Tableau::identity(n), 0);

  for (std::size_t depth = 1; depth <= d_cap; ++depth) {
    std::vector<Tableau> next;
    for (const Tableau& t : levels[depth - 1]) {
      for (const std::vector<Gate>& layer : layers) {
        Tableau u = t;
        for (const Gate& g : layer) u.apply(g);
        if (seen.emplace(u, depth).second) next.push_back(std::move(u));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::size_t brute_force_min_depth(const Tableau& target, const GateSet& gates,
                                  std::size_t d_cap) {
  check_enumeration_guard(target.n(), d_cap);
  const std::vector<std::vector<Tableau>> levels =
      enumerate_reachable_tableaus(target.n(), gates, d_cap);
  for (std::size_t depth = 0; depth < levels.size(); ++depth) {
    for (const Tableau& t : levels[depth]) {
      if (tableau_equal(t, target)) return depth;
    }
  }
  return kDepthNotFound;
}

}  // namespace cliffsynth
