#include "aigsynth/solver.hpp"

#include <algorithm>
#include <cmath>

#include "aigsynth/errors.hpp"

namespace aigsynth {

namespace {

// Luby restart sequence scaled by a base conflict count.
std::uint64_t luby(std::uint64_t i) {
  std::uint64_t k = 1;
  while ((1ull << k) - 1 < i + 1) ++k;
  while ((1ull << k) - 1 != i + 1) {
    --k;
    i -= (1ull << k) - 1;
  }
  return 1ull << (k - 1);
}

constexpr double kVarDecay = 1.0 / 0.95;
constexpr double kClaDecay = 1.0 / 0.999;
constexpr std::uint64_t kRestartBase = 100;

}  // namespace

Solver::Solver() {
  // var 0 is a sentinel
  assign_.push_back(kUnset);
  level_.push_back(0);
  reason_.push_back(-1);
  activity_.push_back(0.0);
  polarity_.push_back(0);
  seen_.push_back(0);
  heap_pos_.push_back(-1);
  watches_.resize(2);
}

void Solver::ensure_var(int var) {
  AIGSYNTH_CHECK(var >= 1);
  while (num_vars() < var) {
    assign_.push_back(kUnset);
    level_.push_back(0);
    reason_.push_back(-1);
    activity_.push_back(0.0);
    polarity_.push_back(0);
    seen_.push_back(0);
    heap_pos_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(num_vars());
  }
}

bool Solver::heap_less(int a, int b) const {
  if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
  return a < b;
}

void Solver::heap_sift_up(int pos) {
  int v = heap_[pos];
  while (pos > 0) {
    int parent = (pos - 1) / 2;
    if (!heap_less(v, heap_[parent])) break;
    heap_[pos] = heap_[parent];
    heap_pos_[heap_[pos]] = pos;
    pos = parent;
  }
  heap_[pos] = v;
  heap_pos_[v] = pos;
}

void Solver::heap_sift_down(int pos) {
  int v = heap_[pos];
  int n = static_cast<int>(heap_.size());
  while (true) {
    int child = 2 * pos + 1;
    if (child >= n) break;
    if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
    if (!heap_less(heap_[child], v)) break;
    heap_[pos] = heap_[child];
    heap_pos_[heap_[pos]] = pos;
    pos = child;
  }
  heap_[pos] = v;
  heap_pos_[v] = pos;
}

void Solver::heap_insert(int var) {
  if (heap_pos_[var] != -1) return;
  heap_.push_back(var);
  heap_pos_[var] = static_cast<int>(heap_.size()) - 1;
  heap_sift_up(heap_pos_[var]);
}

int Solver::heap_pop() {
  int v = heap_[0];
  heap_pos_[v] = -1;
  if (heap_.size() > 1) {
    heap_[0] = heap_.back();
    heap_pos_[heap_[0]] = 0;
    heap_.pop_back();
    heap_sift_down(0);
  } else {
    heap_.pop_back();
  }
  return v;
}

void Solver::heap_update_up(int var) {
  if (heap_pos_[var] != -1) heap_sift_up(heap_pos_[var]);
}

void Solver::bump_var(int var) {
  activity_[var] += var_inc_;
  if (activity_[var] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  heap_update_up(var);
}

void Solver::bump_clause(Cls& c) {
  c.act += cla_inc_;
  if (c.act > 1e20) {
    for (int cref : learnt_refs_) clauses_[cref].act *= 1e-20;
    cla_inc_ *= 1e-20;
  }
}

void Solver::decay_activities() {
  var_inc_ *= kVarDecay;
  cla_inc_ *= kClaDecay;
}

void Solver::attach_clause(int cref) {
  const Cls& c = clauses_[cref];
  AIGSYNTH_CHECK(c.lits.size() >= 2);
  watches_[c.lits[0]].push_back({cref, c.lits[1]});
  watches_[c.lits[1]].push_back({cref, c.lits[0]});
}

bool Solver::add_clause(std::span<const int> dimacs) {
  AIGSYNTH_CHECK(decision_level() == 0);
  if (!ok_) return false;

  std::vector<int> lits;
  lits.reserve(dimacs.size());
  for (int d : dimacs) {
    AIGSYNTH_CHECK(d != 0);
    ensure_var(d < 0 ? -d : d);
    lits.push_back(ilit(d));
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());

  // Drop tautologies, literals false at level 0, and satisfied clauses.
  std::vector<int> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i + 1 < lits.size() && lits[i + 1] == inot(lits[i])) return true;
    if (lit_true(lits[i]) && level_[ivar(lits[i])] == 0) return true;
    if (lit_false(lits[i]) && level_[ivar(lits[i])] == 0) continue;
    kept.push_back(lits[i]);
  }

  if (kept.empty()) {
    ok_ = false;
    return false;
  }
  if (kept.size() == 1) {
    if (lit_false(kept[0])) {
      ok_ = false;
      return false;
    }
    if (!lit_true(kept[0])) enqueue(kept[0], -1);
    if (propagate() != -1) {
      ok_ = false;
      return false;
    }
    return true;
  }

  Cls c;
  c.lits = std::move(kept);
  clauses_.push_back(std::move(c));
  attach_clause(static_cast<int>(clauses_.size()) - 1);
  return true;
}

void Solver::enqueue(int l, int reason_cref) {
  int v = ivar(l);
  AIGSYNTH_CHECK(assign_[v] == kUnset);
  assign_[v] = (l & 1) ? kFalse : kTrue;
  level_[v] = decision_level();
  reason_[v] = reason_cref;
  trail_.push_back(l);
}

int Solver::propagate() {
  while (qhead_ < trail_.size()) {
    int p = trail_[qhead_++];  // p became true; scan clauses watching ¬p
    ++stat_propagations_;
    std::vector<Watch>& ws = watches_[inot(p)];
    std::size_t i = 0, j = 0;
    int confl = -1;
    while (i < ws.size()) {
      Watch w = ws[i];
      if (lit_true(w.blocker)) {
        ws[j++] = ws[i++];
        continue;
      }
      Cls& c = clauses_[w.cref];
      int false_lit = inot(p);
      if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
      // c.lits[1] == false_lit now
      if (lit_true(c.lits[0])) {
        ws[j++] = {w.cref, c.lits[0]};
        ++i;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.lits.size(); ++k) {
        if (!lit_false(c.lits[k])) {
          std::swap(c.lits[1], c.lits[k]);
          watches_[c.lits[1]].push_back({w.cref, c.lits[0]});
          moved = true;
          break;
        }
      }
      if (moved) {
        ++i;  // watch moved away from this list
        continue;
      }
      // Unit or conflict.
      ws[j++] = {w.cref, c.lits[0]};
      ++i;
      if (lit_false(c.lits[0])) {
        confl = w.cref;
        qhead_ = trail_.size();
        while (i < ws.size()) ws[j++] = ws[i++];
        break;
      }
      enqueue(c.lits[0], w.cref);
    }
    ws.resize(j);
    if (confl != -1) return confl;
  }
  return -1;
}

void Solver::cancel_until(int lvl) {
  if (decision_level() <= lvl) return;
  for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[lvl]; --i) {
    int v = ivar(trail_[i]);
    polarity_[v] = assign_[v] == kTrue ? 1 : 0;
    assign_[v] = kUnset;
    reason_[v] = -1;
    heap_insert(v);
  }
  trail_.resize(trail_lim_[lvl]);
  trail_lim_.resize(lvl);
  qhead_ = trail_.size();
}

void Solver::analyze(int confl, std::vector<int>& out_learnt, int& out_btlevel) {
  out_learnt.clear();
  out_learnt.push_back(0);  // placeholder for the asserting literal
  int path_count = 0;
  int p = -1;
  int index = static_cast<int>(trail_.size()) - 1;
  std::vector<int> to_clear;

  do {
    AIGSYNTH_CHECK(confl != -1);
    Cls& c = clauses_[confl];
    if (c.learnt) bump_clause(c);
    for (std::size_t k = (p == -1 ? 0 : 1); k < c.lits.size(); ++k) {
      int q = c.lits[k];
      int v = ivar(q);
      if (!seen_[v] && level_[v] > 0) {
        seen_[v] = 1;
        to_clear.push_back(v);
        bump_var(v);
        if (level_[v] >= decision_level())
          ++path_count;
        else
          out_learnt.push_back(q);
      }
    }
    while (!seen_[ivar(trail_[index])]) --index;
    p = trail_[index];
    --index;
    confl = reason_[ivar(p)];
    seen_[ivar(p)] = 0;
    --path_count;
  } while (path_count > 0);
  out_learnt[0] = inot(p);

  if (out_learnt.size() == 1) {
    out_btlevel = 0;
  } else {
    std::size_t max_i = 1;
    for (std::size_t i = 2; i < out_learnt.size(); ++i)
      if (level_[ivar(out_learnt[i])] > level_[ivar(out_learnt[max_i])]) max_i = i;
    std::swap(out_learnt[1], out_learnt[max_i]);
    out_btlevel = level_[ivar(out_learnt[1])];
  }
  for (int v : to_clear) seen_[v] = 0;
}

void Solver::analyze_final(int false_assumption_ilit,
                           std::span<const int> assumptions_dimacs) {
  conflict_out_.clear();
  conflict_out_.push_back(idimacs(false_assumption_ilit));
  if (decision_level() == 0) return;

  std::vector<int> to_clear;
  seen_[ivar(false_assumption_ilit)] = 1;
  to_clear.push_back(ivar(false_assumption_ilit));

  for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[0]; --i) {
    int v = ivar(trail_[i]);
    if (!seen_[v]) continue;
    if (reason_[v] == -1) {
      // An assumption decision contributing to the conflict.
      conflict_out_.push_back(idimacs(trail_[i]));
    } else {
      const Cls& c = clauses_[reason_[v]];
      for (std::size_t k = 1; k < c.lits.size(); ++k) {
        int w = ivar(c.lits[k]);
        if (level_[w] > 0 && !seen_[w]) {
          seen_[w] = 1;
          to_clear.push_back(w);
        }
      }
    }
    seen_[v] = 0;
  }
  for (int v : to_clear) seen_[v] = 0;

  // Restrict to literals that were actually assumed; the failing assumption
  // itself always belongs to the core.
  std::vector<int> filtered;
  for (int a : assumptions_dimacs)
    for (int c : conflict_out_)
      if (a == c) {
        filtered.push_back(c);
        break;
      }
  if (std::find(filtered.begin(), filtered.end(),
                idimacs(false_assumption_ilit)) == filtered.end())
    filtered.push_back(idimacs(false_assumption_ilit));
  conflict_out_ = std::move(filtered);
}

int Solver::pick_branch_lit() {
  while (!heap_.empty()) {
    int v = heap_[0];
    if (assign_[v] == kUnset) {
      heap_pop();
      return 2 * v + (polarity_[v] ? 0 : 1);
    }
    heap_pop();
  }
  return 0;
}

void Solver::reduce_db() {
  std::sort(learnt_refs_.begin(), learnt_refs_.end(), [this](int a, int b) {
    return clauses_[a].act < clauses_[b].act;
  });
  std::size_t removed = 0;
  std::size_t target = learnt_refs_.size() / 2;
  std::vector<int> kept;
  kept.reserve(learnt_refs_.size());
  for (int cref : learnt_refs_) {
    Cls& c = clauses_[cref];
    bool locked = lit_true(c.lits[0]) && reason_[ivar(c.lits[0])] == cref;
    if (removed < target && !locked && c.lits.size() > 2) {
      c.deleted = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
      ++removed;
    } else {
      kept.push_back(cref);
    }
  }
  learnt_refs_ = std::move(kept);
  for (auto& ws : watches_) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (!clauses_[ws[i].cref].deleted) ws[j++] = ws[i];
    ws.resize(j);
  }
}

bool Solver::solve(std::span<const int> assumptions_dimacs) {
  model_.clear();
  conflict_out_.clear();
  if (!ok_) return false;

  for (int a : assumptions_dimacs) {
    AIGSYNTH_CHECK(a != 0);
    ensure_var(a < 0 ? -a : a);
  }

  cancel_until(0);
  if (propagate() != -1) {
    ok_ = false;
    return false;
  }

  std::uint64_t restart_round = 0;
  std::uint64_t conflicts_until_restart = kRestartBase * luby(restart_round);
  std::uint64_t conflicts_this_round = 0;
  std::vector<int> learnt;

  while (true) {
    int confl = propagate();
    if (confl != -1) {
      ++stat_conflicts_;
      ++conflicts_this_round;
      if (decision_level() == 0) {
        ok_ = false;
        return false;
      }
      int btlevel;
      analyze(confl, learnt, btlevel);
      cancel_until(btlevel);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        Cls c;
        c.lits = learnt;
        c.learnt = true;
        clauses_.push_back(std::move(c));
        int cref = static_cast<int>(clauses_.size()) - 1;
        learnt_refs_.push_back(cref);
        attach_clause(cref);
        bump_clause(clauses_[cref]);
        enqueue(learnt[0], cref);
      }
      decay_activities();
      if (learnt_refs_.size() > max_learnts_) {
        reduce_db();
        max_learnts_ += max_learnts_ / 4;
      }
      continue;
    }

    if (conflicts_this_round >= conflicts_until_restart) {
      conflicts_this_round = 0;
      ++restart_round;
      conflicts_until_restart = kRestartBase * luby(restart_round);
      cancel_until(0);
      continue;
    }

    // Place pending assumptions, one decision level each.
    int next = 0;
    while (decision_level() < static_cast<int>(assumptions_dimacs.size())) {
      int p = ilit(assumptions_dimacs[decision_level()]);
      if (lit_true(p)) {
        new_decision_level();  // already satisfied; keep level indexing
      } else if (lit_false(p)) {
        analyze_final(p, assumptions_dimacs);
        cancel_until(0);
        return false;
      } else {
        next = p;
        break;
      }
    }
    if (next != 0) {
      new_decision_level();
      enqueue(next, -1);
      continue;
    }
    next = pick_branch_lit();
    if (next == 0) {
      model_ = assign_;  // all variables assigned
      cancel_until(0);
      return true;
    }
    ++stat_decisions_;
    new_decision_level();
    enqueue(next, -1);
  }
}

bool Solver::model_value(int var) const {
  if (var < 1 || var >= static_cast<int>(model_.size())) return false;
  return model_[var] == kTrue;
}

}  // namespace aigsynth
