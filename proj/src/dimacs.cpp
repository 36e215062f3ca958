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

#include <charconv>
#include <sstream>
#include <string>

#include "cliffsynth/errors.hpp"
#include "cliffsynth/satio.hpp"

namespace cliffsynth {

std::string export_dimacs(std::size_t num_vars,
                          const std::vector<Clause>& clauses) {
  std::string out = "p cnf " + std::to_string(num_vars) + " " +
                    std::to_string(clauses.size()) + "\n";
  for (const Clause& c : clauses) {
    for (int lit : c) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

std::string export_dimacs(const CnfInstance& instance) {
  return export_dimacs(instance.num_vars(), instance.clauses);
}

DimacsProblem import_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  DimacsProblem problem;
  bool have_header = false;
  Clause current;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;

    if (!have_header) {
      std::istringstream hs(line);
      std::string p, cnf;
      long vars = -1, cls = -1;
      if (!(hs >> p >> cnf >> vars >> cls) || p != "p" || cnf != "cnf" ||
          vars < 0 || cls < 0 || (hs >> p)) {
        throw ParseError("expected header 'p cnf <vars> <clauses>'", lineno,
                         1);
      }
      problem.num_vars = static_cast<int>(vars);
      have_header = true;
      continue;
    }

    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      int lit = 0;
      const auto [ptr, ec] =
          std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("expected integer literal, got '" + tok + "'",
                         lineno, 1);
      }
      if (lit == 0) {
        problem.clauses.push_back(current);
        current.clear();
        continue;
      }
      const int v = lit > 0 ? lit : -lit;
      if (v > problem.num_vars) {
        throw ParseError("literal " + tok + " exceeds declared " +
                             std::to_string(problem.num_vars) + " variables",
                         lineno, 1);
      }
      current.push_back(lit);
    }
  }

  if (!have_header) {
    throw ParseError("missing 'p cnf' header", lineno + 1, 1);
  }
  if (!current.empty()) {
    throw ParseError("last clause is not zero-terminated", lineno, 1);
  }
  return problem;
}

}  // namespace cliffsynth
