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

#include "cdcl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace cliffsynth::internal {

namespace {

constexpr std::uint32_t kNoHeapPos = 0xffffffffu;

// Luby restart sequence: 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
std::uint64_t luby(std::uint64_t i) {
  std::uint64_t k = 1;
  while (((std::uint64_t{1} << k) - 1) < i + 1) ++k;
  while (((std::uint64_t{1} << k) - 1) != i + 1) {
    --k;
    i -= (std::uint64_t{1} << k) - 1;
  }
  return std::uint64_t{1} << (k - 1);
}

std::uint64_t xorshift(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

}  // namespace

CdclSolver::CdclSolver(int num_vars, const std::vector<std::vector<int>>& cls,
                       std::uint64_t seed, double random_freq)
    : num_vars_(static_cast<std::size_t>(num_vars)),
      watches_(2 * num_vars_),
      assigns_(num_vars_, 0),
      polarity_(num_vars_, false),
      reason_(num_vars_, kNoReason),
      level_(num_vars_, 0),
      activity_(num_vars_, 0.0),
      heap_pos_(num_vars_, kNoHeapPos),
      seen_(num_vars_, 0),
      rng_state_(seed * 2654435769u + 0x9e3779b97f4a7c15ull),
      random_freq_(random_freq) {
  heap_.reserve(num_vars_);
  for (std::uint32_t v = 0; v < num_vars_; ++v) heap_insert(v);

  std::vector<Lit> lits;
  for (const std::vector<int>& clause : cls) {
    lits.clear();
    for (int dl : clause) lits.push_back(make_lit(dl));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    bool tautology = false;
    for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
      if (lits[i + 1] == negate(lits[i])) {
        tautology = true;
        break;
      }
    }
    if (tautology) continue;
    // Drop literals already false at level 0; skip satisfied clauses.
    std::vector<Lit> active;
    bool satisfied = false;
    for (Lit l : lits) {
      const int v = value(l);
      if (v == 1) {
        satisfied = true;
        break;
      }
      if (v == 0) active.push_back(l);
    }
    if (satisfied) continue;
    if (active.empty()) {
      ok_ = false;
      return;
    }
    if (active.size() == 1) {
      if (value(active[0]) == -1) {
        ok_ = false;
        return;
      }
      if (value(active[0]) == 0) enqueue(active[0], kNoReason);
      continue;
    }
    clauses_.push_back({std::move(active), 0.0, false, false});
    watch(static_cast<std::uint32_t>(clauses_.size() - 1));
  }
}

void CdclSolver::watch(std::uint32_t ci) {
  const InternalClause& c = clauses_[ci];
  watches_[negate(c.lits[0])].push_back({ci, c.lits[1]});
  watches_[negate(c.lits[1])].push_back({ci, c.lits[0]});
}

void CdclSolver::enqueue(Lit l, std::uint32_t reason) {
  const std::uint32_t v = var_of(l);
  assigns_[v] = (l & 1) ? -1 : 1;
  reason_[v] = reason;
  level_[v] = static_cast<std::uint32_t>(trail_lim_.size());
  trail_.push_back(l);
}

std::uint32_t CdclSolver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    std::vector<Watcher>& ws = watches_[p];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      const Watcher w = ws[i];
      if (clauses_[w.clause].deleted) {
        ++i;
        continue;
      }
      if (value(w.blocker) == 1) {
        ws[j++] = ws[i++];
        continue;
      }
      InternalClause& c = clauses_[w.clause];
      const Lit false_lit = negate(p);
      if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
      const Lit first = c.lits[0];
      if (first != w.blocker && value(first) == 1) {
        ws[j++] = {w.clause, first};
        ++i;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.lits.size(); ++k) {
        if (value(c.lits[k]) != -1) {
          std::swap(c.lits[1], c.lits[k]);
          watches_[negate(c.lits[1])].push_back({w.clause, first});
          moved = true;
          break;
        }
      }
      if (moved) {
        ++i;
        continue;
      }
      // Unit or conflicting.
      ws[j++] = {w.clause, first};
      ++i;
      if (value(first) == -1) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return w.clause;
      }
      enqueue(first, w.clause);
    }
    ws.resize(j);
  }
  return kNoReason;
}

void CdclSolver::analyze(std::uint32_t confl, std::vector<Lit>& learnt,
                         int& bt_level) {
  learnt.clear();
  learnt.push_back(0);  // room for the asserting literal
  const std::uint32_t current = static_cast<std::uint32_t>(trail_lim_.size());
  int path = 0;
  Lit p = 0;
  bool have_p = false;
  std::size_t index = trail_.size();

  for (;;) {
    InternalClause& c = clauses_[confl];
    if (c.learnt) bump_clause(confl);
    for (std::size_t k = have_p ? 1 : 0; k < c.lits.size(); ++k) {
      const Lit q = c.lits[k];
      const std::uint32_t v = var_of(q);
      if (!seen_[v] && level_[v] > 0) {
        seen_[v] = 1;
        bump_var(v);
        if (level_[v] >= current) {
          ++path;
        } else {
          learnt.push_back(q);
        }
      }
    }
    while (!seen_[var_of(trail_[--index])]) {
    }
    p = trail_[index];
    have_p = true;
    seen_[var_of(p)] = 0;
    if (--path == 0) break;
    confl = reason_[var_of(p)];
  }
  learnt[0] = negate(p);

  // Conflict-clause minimization: drop implied literals.
  analyze_clear_.assign(learnt.begin() + 1, learnt.end());
  std::uint32_t levels_mask = 0;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    levels_mask |= std::uint32_t{1} << (level_[var_of(learnt[k])] & 31);
  }
  std::size_t out = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    const std::uint32_t v = var_of(learnt[k]);
    if (reason_[v] == kNoReason || !lit_redundant(learnt[k], levels_mask)) {
      learnt[out++] = learnt[k];
    }
  }
  learnt.resize(out);
  for (Lit l : analyze_clear_) seen_[var_of(l)] = 0;

  // Second watch / backjump level: highest level among the rest.
  bt_level = 0;
  if (learnt.size() > 1) {
    std::size_t max_k = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k) {
      if (level_[var_of(learnt[k])] > level_[var_of(learnt[max_k])]) max_k = k;
    }
    std::swap(learnt[1], learnt[max_k]);
    bt_level = static_cast<int>(level_[var_of(learnt[1])]);
  }
}

bool CdclSolver::lit_redundant(Lit l, std::uint32_t levels_mask) {
  analyze_stack_.clear();
  analyze_stack_.push_back(l);
  const std::size_t top = analyze_clear_.size();
  while (!analyze_stack_.empty()) {
    const Lit cur = analyze_stack_.back();
    analyze_stack_.pop_back();
    const InternalClause& c = clauses_[reason_[var_of(cur)]];
    for (std::size_t k = 1; k < c.lits.size(); ++k) {
      const Lit q = c.lits[k];
      const std::uint32_t v = var_of(q);
      if (seen_[v] || level_[v] == 0) continue;
      if (reason_[v] != kNoReason &&
          ((std::uint32_t{1} << (level_[v] & 31)) & levels_mask)) {
        seen_[v] = 1;
        analyze_stack_.push_back(q);
        analyze_clear_.push_back(q);
      } else {
        for (std::size_t j = top; j < analyze_clear_.size(); ++j) {
          seen_[var_of(analyze_clear_[j])] = 0;
        }
        analyze_clear_.resize(top);
        return false;
      }
    }
  }
  return true;
}

void CdclSolver::backtrack(int target) {
  if (static_cast<int>(trail_lim_.size()) <= target) return;
  const std::size_t bound = trail_lim_[static_cast<std::size_t>(target)];
  for (std::size_t i = trail_.size(); i-- > bound;) {
    const std::uint32_t v = var_of(trail_[i]);
    polarity_[v] = assigns_[v] == 1;
    assigns_[v] = 0;
    reason_[v] = kNoReason;
    if (heap_pos_[v] == kNoHeapPos) heap_insert(v);
  }
  trail_.resize(bound);
  trail_lim_.resize(static_cast<std::size_t>(target));
  qhead_ = bound;
}

CdclSolver::Lit CdclSolver::pick_branch() {
  if (random_freq_ > 0.0 && !heap_.empty() &&
      (xorshift(rng_state_) >> 11) * 0x1.0p-53 < random_freq_) {
    const std::uint32_t v =
        heap_[xorshift(rng_state_) % heap_.size()];
    if (assigns_[v] == 0) {
      ++decisions_;
      return 2 * v + (polarity_[v] ? 0 : 1);
    }
  }
  while (!heap_.empty()) {
    const std::uint32_t v = heap_pop();
    if (assigns_[v] == 0) {
      ++decisions_;
      return 2 * v + (polarity_[v] ? 0 : 1);
    }
  }
  return 0xffffffffu;  // everything assigned
}

void CdclSolver::bump_var(std::uint32_t v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] != kNoHeapPos) heap_percolate_up(heap_pos_[v]);
}

void CdclSolver::bump_clause(std::uint32_t ci) {
  InternalClause& c = clauses_[ci];
  c.activity += clause_inc_;
  if (c.activity > 1e20) {
    for (InternalClause& cl : clauses_) cl.activity *= 1e-20;
    clause_inc_ *= 1e-20;
  }
}

void CdclSolver::decay_activities() {
  var_inc_ /= 0.95;
  clause_inc_ /= 0.999;
}

std::uint32_t CdclSolver::add_learnt(const std::vector<Lit>& lits) {
  clauses_.push_back({lits, clause_inc_, true, false});
  const auto ci = static_cast<std::uint32_t>(clauses_.size() - 1);
  watch(ci);
  ++num_learnts_;
  return ci;
}

void CdclSolver::reduce_db() {
  std::vector<std::uint32_t> learnts;
  for (std::uint32_t ci = 0; ci < clauses_.size(); ++ci) {
    const InternalClause& c = clauses_[ci];
    if (!c.learnt || c.deleted || c.lits.size() <= 2) continue;
    // A clause currently acting as a reason must be kept.
    const std::uint32_t v = var_of(c.lits[0]);
    if (assigns_[v] != 0 && reason_[v] == ci) continue;
    learnts.push_back(ci);
  }
  std::sort(learnts.begin(), learnts.end(),
            [this](std::uint32_t a, std::uint32_t b) {
              return clauses_[a].activity < clauses_[b].activity;
            });
  for (std::size_t i = 0; i < learnts.size() / 2; ++i) {
    InternalClause& c = clauses_[learnts[i]];
    c.deleted = true;
    c.lits.clear();
    c.lits.shrink_to_fit();
    --num_learnts_;
  }
}

void CdclSolver::heap_insert(std::uint32_t v) {
  heap_pos_[v] = static_cast<std::uint32_t>(heap_.size());
  heap_.push_back(v);
  heap_percolate_up(heap_.size() - 1);
}

void CdclSolver::heap_percolate_up(std::size_t i) {
  const std::uint32_t v = heap_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (activity_[heap_[parent]] >= activity_[v]) break;
    heap_[i] = heap_[parent];
    heap_pos_[heap_[i]] = static_cast<std::uint32_t>(i);
    i = parent;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<std::uint32_t>(i);
}

void CdclSolver::heap_percolate_down(std::size_t i) {
  const std::uint32_t v = heap_[i];
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= heap_.size()) break;
    if (child + 1 < heap_.size() &&
        activity_[heap_[child + 1]] > activity_[heap_[child]]) {
      ++child;
    }
    if (activity_[heap_[child]] <= activity_[v]) break;
    heap_[i] = heap_[child];
    heap_pos_[heap_[i]] = static_cast<std::uint32_t>(i);
    i = child;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<std::uint32_t>(i);
}

std::uint32_t CdclSolver::heap_pop() {
  const std::uint32_t v = heap_[0];
  heap_pos_[v] = kNoHeapPos;
  heap_[0] = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_pos_[heap_[0]] = 0;
    heap_percolate_down(0);
  }
  return v;
}

CdclSolver::Result CdclSolver::solve(const Limits& limits) {
  Result res;
  if (!ok_) {
    res.status = Status::kUnsat;
    return res;
  }

  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (!std::isfinite(limits.max_seconds)) return false;
    const std::chrono::duration<double> el =
        std::chrono::steady_clock::now() - start;
    return el.count() > limits.max_seconds;
  };

  double max_learnts =
      std::max<double>(static_cast<double>(clauses_.size()) / 3.0, 1000.0);
  std::uint64_t restart_idx = 0;
  std::uint64_t restart_budget = 100 * luby(restart_idx);
  std::uint64_t conflicts_at_restart = 0;
  std::vector<Lit> learnt;

  for (;;) {
    const std::uint32_t confl = propagate();
    if (confl != kNoReason) {
      ++conflicts_;
      if (trail_lim_.empty()) {
        res.status = Status::kUnsat;
        break;
      }
      int bt = 0;
      analyze(confl, learnt, bt);
      backtrack(bt);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoReason);
      } else {
        const std::uint32_t ci = add_learnt(learnt);
        enqueue(learnt[0], ci);
      }
      decay_activities();

      if (conflicts_ >= limits.max_conflicts ||
          ((conflicts_ & 1023) == 0 && out_of_time())) {
        res.status = Status::kUnknown;
        break;
      }
      if (conflicts_ - conflicts_at_restart >= restart_budget) {
        backtrack(0);
        ++restart_idx;
        restart_budget = 100 * luby(restart_idx);
        conflicts_at_restart = conflicts_;
      }
      if (static_cast<double>(num_learnts_) >
          max_learnts + static_cast<double>(trail_.size())) {
        reduce_db();
        max_learnts *= 1.1;
      }
    } else {
      const Lit next = pick_branch();
      if (next == 0xffffffffu) {
        res.status = Status::kSat;
        res.model.assign(num_vars_ + 1, false);
        for (std::size_t v = 0; v < num_vars_; ++v) {
          res.model[v + 1] = assigns_[v] == 1;
        }
        break;
      }
      trail_lim_.push_back(trail_.size());
      enqueue(next, kNoReason);
    }
  }

  res.conflicts = conflicts_;
  res.decisions = decisions_;
  return res;
}

}  // namespace cliffsynth::internal
