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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cliffsynth/errors.hpp"
#include "cliffsynth/satio.hpp"

// Standalone DIMACS CNF frontend for the built-in CDCL solver. Prints the
// usual competition-style result lines ("s ..." and, for satisfiable
// instances, "v ..." with a terminating 0) so it can serve as the
// executable behind an exec: solver backend. Exit codes follow the same
// convention: 10 satisfiable, 20 unsatisfiable, 0 undetermined.
int main(int argc, char** argv) {
  CLI::App app{"cliffsat: DIMACS CNF frontend for the cliffsynth solver"};
  std::string path = "-";
  std::uint64_t seed = 0;
  double timeout = std::numeric_limits<double>::infinity();
  std::uint64_t max_conflicts = std::numeric_limits<std::uint64_t>::max();
  app.add_option("file", path, "Input file ('-' or absent reads stdin)");
  app.add_option("--seed", seed, "Decision seed");
  app.add_option("--timeout", timeout, "Budget in seconds");
  app.add_option("--max-conflicts", max_conflicts, "Conflict budget");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open " << path << "\n";
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  cliffsynth::DimacsProblem problem;
  try {
    problem = cliffsynth::import_dimacs(text);
  } catch (const cliffsynth::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  cliffsynth::SolveLimits limits;
  limits.max_seconds = timeout;
  limits.max_conflicts = max_conflicts;
  const auto num_vars = static_cast<std::size_t>(problem.num_vars);
  const cliffsynth::SatOutcome outcome =
      cliffsynth::make_internal_solver(seed)->solve(num_vars, problem.clauses,
                                                    limits);

  std::cout << "c cliffsat\n";
  switch (outcome.status) {
    case cliffsynth::SatStatus::kSat: {
      std::cout << "s SATISFIABLE\n";
      std::cout << "v";
      for (std::size_t v = 1; v <= num_vars; ++v) {
        std::cout << " " << (outcome.model[v] ? static_cast<int>(v)
                                              : -static_cast<int>(v));
      }
      std::cout << " 0\n";
      return 10;
    }
    case cliffsynth::SatStatus::kUnsat:
      std::cout << "s UNSATISFIABLE\n";
      return 20;
    default:
      std::cout << "s UNKNOWN\n";
      return 0;
  }
}
