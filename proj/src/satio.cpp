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

#include "cliffsynth/satio.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cdcl.hpp"
#include "cliffsynth/errors.hpp"

namespace cliffsynth {

bool model_satisfies(const std::vector<Clause>& clauses,
                     const std::vector<bool>& model) {
  auto holds = [&model](int lit) {
    const auto v = static_cast<std::size_t>(lit > 0 ? lit : -lit);
    if (v >= model.size()) return lit < 0;  // out-of-range vars read false
    return lit > 0 ? static_cast<bool>(model[v]) : !model[v];
  };
  for (const Clause& c : clauses) {
    bool sat = false;
    for (int lit : c) {
      if (holds(lit)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

SatOutcome SatSolver::solve(const CnfInstance& instance,
                            const SolveLimits& limits) {
  return solve(instance.num_vars(), instance.clauses, limits);
}

namespace {

void verify_or_throw(const std::vector<Clause>& clauses,
                     const std::vector<bool>& model, const char* backend) {
  if (!model_satisfies(clauses, model)) {
    throw InternalConsistencyError(
        std::string(backend) +
        " backend reported SAT with an assignment that violates the "
        "instance");
  }
}

class InternalSolver final : public SatSolver {
 public:
  InternalSolver(std::uint64_t seed, double random_freq)
      : seed_(seed), random_freq_(random_freq) {}

  using SatSolver::solve;

  SatOutcome solve(std::size_t num_vars, const std::vector<Clause>& clauses,
                   const SolveLimits& limits) override {
    const auto start = std::chrono::steady_clock::now();
    internal::CdclSolver solver(static_cast<int>(num_vars), clauses, seed_,
                                random_freq_);
    internal::CdclSolver::Limits l;
    l.max_seconds = limits.max_seconds;
    l.max_conflicts = limits.max_conflicts;
    const internal::CdclSolver::Result r = solver.solve(l);

    SatOutcome out;
    out.stats.conflicts = r.conflicts;
    out.stats.decisions = r.decisions;
    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    switch (r.status) {
      case internal::CdclSolver::Status::kSat:
        out.status = SatStatus::kSat;
        out.model = r.model;
        verify_or_throw(clauses, out.model, "internal");
        break;
      case internal::CdclSolver::Status::kUnsat:
        out.status = SatStatus::kUnsat;
        break;
      case internal::CdclSolver::Status::kUnknown:
        out.status = SatStatus::kUnknown;
        break;
    }
    return out;
  }

 private:
  std::uint64_t seed_;
  double random_freq_;
};

/// Owns a temporary DIMACS file for the lifetime of one subprocess call.
class TempCnfFile {
 public:
  explicit TempCnfFile(const std::string& contents) {
    const auto dir = std::filesystem::temp_directory_path();
    path_ = dir / ("cliffsynth-" + std::to_string(std::rand()) + "-" +
                   std::to_string(reinterpret_cast<std::uintptr_t>(this)) +
                   ".cnf");
    std::ofstream out(path_);
    out << contents;
    if (!out) {
      throw std::runtime_error("failed to write temporary CNF file " +
                               path_.string());
    }
  }
  ~TempCnfFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

class SubprocessSolver final : public SatSolver {
 public:
  explicit SubprocessSolver(std::string executable)
      : executable_(std::move(executable)) {}

  using SatSolver::solve;

  SatOutcome solve(std::size_t num_vars, const std::vector<Clause>& clauses,
                   const SolveLimits& limits) override {
    const auto start = std::chrono::steady_clock::now();
    TempCnfFile file(export_dimacs(num_vars, clauses));

    std::string cmd;
    if (std::isfinite(limits.max_seconds)) {
      cmd = "timeout " + std::to_string(limits.max_seconds) + "s ";
    }
    cmd += "'" + executable_ + "' '" + file.path().string() + "'";

    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      throw std::runtime_error("failed to launch SAT backend: " + cmd);
    }
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
      output.append(buf, got);
    }
    pclose(pipe);

    SatOutcome out;
    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    parse_output(output, num_vars, clauses, out);
    return out;
  }

 private:
  void parse_output(const std::string& output, std::size_t num_vars,
                    const std::vector<Clause>& clauses, SatOutcome& out) const {
    std::istringstream in(output);
    std::string line;
    std::vector<int> lits;
    while (std::getline(in, line)) {
      if (line.rfind("s ", 0) == 0) {
        const std::string verdict = line.substr(2);
        if (verdict.rfind("SATISFIABLE", 0) == 0) {
          out.status = SatStatus::kSat;
        } else if (verdict.rfind("UNSATISFIABLE", 0) == 0) {
          out.status = SatStatus::kUnsat;
        } else {
          out.status = SatStatus::kUnknown;
        }
      } else if (line.rfind("v ", 0) == 0) {
        std::istringstream vs(line.substr(2));
        int lit;
        while (vs >> lit) {
          if (lit != 0) lits.push_back(lit);
        }
      }
    }
    if (out.status == SatStatus::kSat) {
      out.model.assign(num_vars + 1, false);
      for (int lit : lits) {
        const auto v = static_cast<std::size_t>(lit > 0 ? lit : -lit);
        if (v == 0 || v >= out.model.size()) {
          throw InternalConsistencyError(
              "subprocess backend emitted a literal outside the instance");
        }
        out.model[v] = lit > 0;
      }
      verify_or_throw(clauses, out.model, "subprocess");
    }
  }

  std::string executable_;
};

}  // namespace

std::unique_ptr<SatSolver> make_internal_solver(std::uint64_t seed,
                                                double random_freq) {
  return std::make_unique<InternalSolver>(seed, random_freq);
}

std::unique_ptr<SatSolver> make_subprocess_solver(std::string executable) {
  return std::make_unique<SubprocessSolver>(std::move(executable));
}

SolverFactory internal_solver_factory(std::uint64_t seed, double random_freq) {
  return [seed, random_freq] { return make_internal_solver(seed, random_freq); };
}

SolverFactory subprocess_solver_factory(std::string executable) {
  return [executable] { return make_subprocess_solver(executable); };
}

}  // namespace cliffsynth
