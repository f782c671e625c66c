#include "aigsynth/sat.hpp"

#include <algorithm>

#include "aigsynth/checks.hpp"
#include "aigsynth/errors.hpp"

namespace aigsynth {

SatSession::SatSession() = default;

void SatSession::add_clause(const Clause& c) {
  if (c.is_tautology()) return;
  std::vector<int> dimacs;
  dimacs.reserve(c.size());
  for (Lit l : c.lits()) dimacs.push_back(l.dimacs());
  solver_.add_clause(dimacs);
  ++clause_count_;
}

void SatSession::add_clause(std::span<const Lit> lits) {
  add_clause(Clause(std::vector<Lit>(lits.begin(), lits.end())));
}

void SatSession::add_cnf(const Cnf& f) {
  for (const Clause& c : f.clauses()) add_clause(c);
}

void SatSession::add_unit(Lit l) { add_clause(Clause({l.dimacs()})); }

void SatSession::register_vars(std::span<const int> vars) {
  for (int v : vars) solver_.ensure_var(v);
}

SatSession::Result SatSession::solve_assuming(const Cube& assumptions,
                                              std::span<const int> projection) {
  register_vars(projection);
  std::vector<int> assum;
  assum.reserve(assumptions.size());
  for (Lit l : assumptions.lits()) assum.push_back(l.dimacs());
  ++solve_count_;
  bool sat = solver_.solve(assum);
  Result r;
  r.sat = sat;
  if (sat) {
    std::vector<Lit> model;
    model.reserve(projection.size());
    for (int v : projection)
      model.push_back(solver_.model_value(v) ? Lit::pos(v) : Lit::neg(v));
    r.model = Cube(std::move(model));
    failed_ = Cube{};
  } else {
    std::vector<Lit> failed;
    for (int d : solver_.failed_assumptions()) failed.push_back(Lit(d));
    failed_ = Cube(std::move(failed));
  }
  return r;
}

bool SatSession::solve(const Cube& assumptions) {
  return solve_assuming(assumptions, {}).sat;
}

Cube unsat_core_min(const Cube& start, SatSession& formula) {
  if (formula.solve(start))
    throw contract_error("core extraction: cube is consistent with the formula");
  Cube core = formula.last_failed_assumptions();

  // Iterate over the remaining literals; each drop is kept when the rest is
  // still inconsistent. A SAT answer for a superset stays valid for later,
  // smaller candidates, so one pass yields local minimality.
  std::size_t i = 0;
  while (i < core.size()) {
    Cube candidate = core.without(i);
    if (!formula.solve(candidate))
      core = formula.last_failed_assumptions();
    else
      ++i;
  }

  if (runtime_checks_enabled()) {
    AIGSYNTH_CHECK(!formula.solve(core));
    for (Lit l : core.lits()) AIGSYNTH_CHECK(start.contains(l));
    for (std::size_t k = 0; k < core.size(); ++k)
      AIGSYNTH_CHECK(formula.solve(core.without(k)));
  }
  return core;
}

Cube unsat_core_min(const Cube& start, const Cnf& formula) {
  SatSession session;
  session.add_cnf(formula);
  return unsat_core_min(start, session);
}

Cnf simplify_cnf(const Cnf& f) {
  if (f.has_empty_clause()) {
    Cnf out;
    out.add_clause(Clause{});
    return out;
  }
  if (f.is_true()) return f;

  // Selector-guarded clauses: assuming ¬s_i activates clause i, assuming s_i
  // discharges it. Clause/literal replacements enter with fresh selectors;
  // stale selectors are simply never assumed again.
  int next_sel = f.max_var() + 1;
  SatSession session;

  struct Entry {
    Clause clause;
    int selector;
    bool alive;
  };
  std::vector<Entry> entries;
  entries.reserve(f.clause_count());
  auto push_guarded = [&](const Clause& c, int sel) {
    std::vector<Lit> lits(c.lits());
    lits.push_back(Lit::pos(sel));
    session.add_clause(Clause(std::move(lits)));
  };
  for (const Clause& c : f.clauses()) {
    int sel = next_sel++;
    push_guarded(c, sel);
    entries.push_back({c, sel, true});
  }

  auto assumptions_enabling_all_but = [&](int skip_idx) {
    std::vector<Lit> a;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (!entries[j].alive) continue;
      if (static_cast<int>(j) == skip_idx)
        a.push_back(Lit::pos(entries[j].selector));
      else
        a.push_back(Lit::neg(entries[j].selector));
    }
    return a;
  };

  // Clause pass: remove c when the remaining clauses imply it.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::vector<Lit> a = assumptions_enabling_all_but(static_cast<int>(i));
    for (Lit l : entries[i].clause.lits()) a.push_back(-l);
    if (!session.solve(Cube(std::move(a)))) entries[i].alive = false;
  }

  // Literal pass: drop l from c when the whole formula implies c without l.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].alive) continue;
    std::size_t li = 0;
    while (li < entries[i].clause.size()) {
      Clause shorter = entries[i].clause.without(li);
      std::vector<Lit> a = assumptions_enabling_all_but(-1);
      for (Lit l : shorter.lits()) a.push_back(-l);
      if (!session.solve(Cube(std::move(a)))) {
        int sel = next_sel++;
        push_guarded(shorter, sel);
        entries[i].clause = shorter;
        entries[i].selector = sel;
        // li stays: positions shifted
      } else {
        ++li;
      }
    }
  }

  Cnf out;
  for (const Entry& e : entries)
    if (e.alive) out.add_clause(e.clause);
  return out;
}

}  // namespace aigsynth
