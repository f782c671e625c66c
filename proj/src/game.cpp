#include "aigsynth/game.hpp"

#include <algorithm>
#include <memory>

#include "aigsynth/qbf.hpp"
#include "aigsynth/sat.hpp"

namespace aigsynth {

WinningRegion compute_winning_region(const SafetySpec& spec, VarPool& pool,
                                     const Deadline& deadline,
                                     GameStats* stats) {
  Renaming prime = spec.prime_renaming();
  Cnf w;
  w.add_clause(Clause({(-spec.error_lit).dimacs()}));

  // Generalization session: ∃x̄ ∀ī ∃(ō, x̄', aux): W ∧ T ∧ W'. Both the
  // current and primed region only ever gain clauses here, so this session
  // lives across the whole computation.
  QuantPrefix gen_prefix;
  gen_prefix.outer_exists = spec.state_vars;
  gen_prefix.forall = spec.input_vars;
  gen_prefix.inner_exists = spec.ctrl_vars;
  gen_prefix.inner_exists.insert(gen_prefix.inner_exists.end(),
                                 spec.next_vars.begin(), spec.next_vars.end());
  gen_prefix.inner_exists.insert(gen_prefix.inner_exists.end(),
                                 spec.aux_vars.begin(), spec.aux_vars.end());
  QbfSession gen_session(gen_prefix, pool);
  gen_session.add_cnf(spec.transition);
  gen_session.add_cnf(w);
  gen_session.add_cnf(prime.image(w));

  // Check session: ∃(x̄, ī) ∀ō ∃(x̄', aux, negaux): W ∧ T ∧ ¬G'. The primed
  // complement is rebuilt lazily whenever the stale copy G falls behind W.
  auto build_check_session = [&](const Cnf& w_now) {
    QuantPrefix p;
    p.outer_exists = spec.state_vars;
    p.outer_exists.insert(p.outer_exists.end(), spec.input_vars.begin(),
                          spec.input_vars.end());
    p.forall = spec.ctrl_vars;
    p.inner_exists = spec.next_vars;
    p.inner_exists.insert(p.inner_exists.end(), spec.aux_vars.begin(),
                          spec.aux_vars.end());
    Cnf not_w_next = negate_cnf_with_aux(prime.image(w_now), pool);
    for (int v : not_w_next.vars()) {
      bool known = false;
      for (int nv : p.inner_exists)
        if (nv == v) known = true;
      for (int nv : p.outer_exists)
        if (nv == v) known = true;
      if (!known) p.inner_exists.push_back(v);
    }
    auto session = std::make_unique<QbfSession>(p, pool);
    session->add_cnf(spec.transition);
    session->add_cnf(w_now);
    session->add_cnf(not_w_next);
    return session;
  };

  auto check_session = build_check_session(w);
  bool check_is_fresh = true;

  while (true) {
    deadline.poll();
    auto r = check_session->solve_assuming(Cube{}, deadline);
    if (!r.sat) {
      if (check_is_fresh) break;  // fixpoint, no stale complement in play
      check_session = build_check_session(w);
      check_is_fresh = true;
      if (stats) ++stats->session_rebuilds;
      continue;
    }
    if (stats) ++stats->counterexamples;

    Cube state_cube = r.outer_model.project(spec.state_vars);
    Cube blocked = gen_session.core(state_cube, deadline);
    Clause blocking_clause = [&] {
      std::vector<Lit> lits;
      lits.reserve(blocked.size());
      for (Lit l : blocked.lits()) lits.push_back(-l);
      return Clause(std::move(lits));
    }();

    w.add_clause(blocking_clause);
    check_session->add_clause(blocking_clause);
    check_is_fresh = false;
    gen_session.add_clause(blocking_clause);
    gen_session.add_clause(prime.image(blocking_clause));
  }

  Cnf simplified = simplify_cnf(w);
  return WinningRegion::from_current(simplified, spec);
}

bool check_realizability(const SafetySpec& spec, const WinningRegion& w) {
  SatSession session;
  session.add_cnf(w.current);
  std::vector<Lit> zero;
  zero.reserve(spec.state_vars.size());
  for (int v : spec.state_vars) zero.push_back(Lit::neg(v));
  return session.solve(Cube(std::move(zero)));
}

}  // namespace aigsynth
