#include "aigsynth/extract_interp.hpp"

#include <algorithm>
#include <unordered_set>

#include "aigsynth/checks.hpp"
#include "aigsynth/errors.hpp"
#include "aigsynth/sat.hpp"

namespace aigsynth {

Cnf learn_interpolant(const Cnf& must_true, const Cnf& must_false,
                      std::span<const int> dependable, int* iterations,
                      const Deadline& deadline) {
  SatSession wrongly_true;  // must_false ∧ f, gains one clause per round
  wrongly_true.add_cnf(must_false);
  wrongly_true.register_vars(dependable);

  SatSession must_true_session;  // fixed
  must_true_session.add_cnf(must_true);
  must_true_session.register_vars(dependable);

  Cnf f;
  int iter = 0;
  while (true) {
    deadline.poll();
    auto r = wrongly_true.solve_assuming(Cube{}, dependable);
    if (!r.sat) break;
    ++iter;
    Cube core;
    try {
      core = unsat_core_min(r.model, must_true_session);
    } catch (const contract_error&) {
      throw strategy_conflict_error(
          "must-true and must-false regions overlap; the strategy is "
          "inconsistent");
    }
    std::vector<Lit> lits;
    lits.reserve(core.size());
    for (Lit l : core.lits()) lits.push_back(-l);
    Clause block(std::move(lits));
    f.add_clause(block);
    wrongly_true.add_clause(block);
  }
  if (iterations) *iterations = iter;
  return f;
}

InterpContext::InterpContext(const SafetySpec& spec, const WinningRegion& w,
                             VarPool& pool, const InterpOptions& opt)
    : spec_(spec), w_(w), pool_(&pool), dependency_opt_(opt.dependency_opt) {
  neg_w_next_ = negated_next_region(w, pool, opt.negw, &neg_aux_);
}

std::vector<int> InterpContext::allowed_outputs(int v) const {
  std::vector<int> out;
  std::unordered_set<int> done(processed_.begin(), processed_.end());
  for (int o : spec_.ctrl_vars) {
    if (o == v) continue;
    if (!done.count(o)) {
      out.push_back(o);
    } else if (dependency_opt_ && !deps_.has_path(o, v)) {
      // o's function does not reach back to v, so v may read o.
      out.push_back(o);
    }
  }
  return out;
}

std::vector<int> InterpContext::admitted_aux(int v) const {
  if (!dependency_opt_) return {};
  std::vector<int> allowed = allowed_outputs(v);
  std::unordered_set<int> dependable(allowed.begin(), allowed.end());
  dependable.insert(spec_.state_vars.begin(), spec_.state_vars.end());
  dependable.insert(spec_.input_vars.begin(), spec_.input_vars.end());

  std::vector<int> out;
  for (int a : spec_.aux_vars) {
    if (a == spec_.const_true_var) {
      out.push_back(a);
      continue;
    }
    bool ok = true;
    for (int s : spec_.structural_support(a))
      if (!dependable.count(s)) ok = false;
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<int> InterpContext::dependable_vars(int v) const {
  std::vector<int> d = spec_.state_vars;
  d.insert(d.end(), spec_.input_vars.begin(), spec_.input_vars.end());
  std::vector<int> outs = allowed_outputs(v);
  d.insert(d.end(), outs.begin(), outs.end());
  std::vector<int> aux = admitted_aux(v);
  d.insert(d.end(), aux.begin(), aux.end());
  return d;
}

MustPair InterpContext::build_must_pair(int v) {
  std::unordered_set<int> dependable;
  MustPair pair;
  pair.dependable = dependable_vars(v);
  dependable.insert(pair.dependable.begin(), pair.dependable.end());

  // Everything else is renamed apart per copy: v itself, processed outputs
  // v may not read, primed states, non-admitted auxiliaries, and the
  // auxiliaries of the negated-region and renamed definitions.
  std::vector<int> group{v};
  std::vector<int> renamed_processed;
  for (int p : processed_)
    if (!dependable.count(p)) {
      group.push_back(p);
      renamed_processed.push_back(p);
      const std::vector<int>& da = def_aux_.at(p);
      group.insert(group.end(), da.begin(), da.end());
    }
  group.insert(group.end(), spec_.next_vars.begin(), spec_.next_vars.end());
  for (int a : spec_.aux_vars)
    if (!dependable.count(a)) group.push_back(a);
  group.insert(group.end(), neg_aux_.begin(), neg_aux_.end());

  // Shared definitions of readable processed outputs enter once.
  Cnf shared_defs;
  for (int p : processed_)
    if (dependable.count(p)) shared_defs.append(def_of_.at(p));

  Cnf move_ok = spec_.transition;  // T ∧ defs ∧ W'
  Cnf move_bad = spec_.transition;  // T ∧ defs ∧ W ∧ ¬W'
  for (int p : renamed_processed) {
    move_ok.append(def_of_.at(p));
    move_bad.append(def_of_.at(p));
  }
  move_ok.append(w_.next);
  move_bad.append(w_.current);
  move_bad.append(neg_w_next_);

  auto copy_of = [&](const Cnf& base, int v_sign) {
    Cnf piece = base;
    piece.add_clause(Clause({v_sign}));
    return rename_apart(piece, group, *pool_).first;
  };

  pair.must_true = copy_of(move_ok, v);
  pair.must_true.append(copy_of(move_bad, -v));
  pair.must_true.append(shared_defs);

  pair.must_false = copy_of(move_ok, -v);
  pair.must_false.append(copy_of(move_bad, v));
  pair.must_false.append(shared_defs);
  return pair;
}

std::vector<int> InterpContext::output_support(const Cnf& f) const {
  std::unordered_set<int> ctrl(spec_.ctrl_vars.begin(), spec_.ctrl_vars.end());
  std::unordered_set<int> seen;
  std::vector<int> out;
  for (int var : f.vars()) {
    if (ctrl.count(var)) {
      if (seen.insert(var).second) out.push_back(var);
    } else if (spec_.gate_of.count(var)) {
      for (int s : spec_.structural_support(var))
        if (ctrl.count(s) && seen.insert(s).second) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void InterpContext::commit(int v, const Cnf& f_v) {
  deps_.set_edges(v, output_support(f_v));
  std::vector<int> aux;
  def_of_.emplace(v, resubstitute(Cnf{}, v, f_v, *pool_, &aux));
  def_aux_.emplace(v, std::move(aux));
  processed_.push_back(v);
  AIGSYNTH_CHECK(deps_.acyclic(spec_.ctrl_vars));
}

InterpResult extract_by_interpolation(const SafetySpec& spec,
                                      const WinningRegion& w, VarPool& pool,
                                      const InterpOptions& opt) {
  InterpContext ctx(spec, w, pool, opt);
  InterpResult result;
  for (int v : spec.ctrl_vars) {
    opt.deadline.poll();
    MustPair pair = ctx.build_must_pair(v);
    int iterations = 0;
    Cnf f = learn_interpolant(pair.must_true, pair.must_false, pair.dependable,
                              &iterations, opt.deadline);
    if (runtime_checks_enabled()) {
      // Interpolant contract: must_true ⇒ f and f ∧ must_false UNSAT.
      VarPool scratch = pool;
      SatSession a;
      a.add_cnf(pair.must_true);
      a.add_cnf(negate_cnf_with_aux(f, scratch));
      AIGSYNTH_CHECK(!a.solve());
      SatSession b;
      b.add_cnf(pair.must_false);
      b.add_cnf(f);
      AIGSYNTH_CHECK(!b.solve());
    }
    ctx.commit(v, f);
    result.functions.push_back({v, f});
    result.iterations_per_output.push_back(iterations);
  }
  result.deps = ctx.deps();
  if (opt.minimize)
    post_minimize(spec, w, result.functions, result.deps, pool, opt.negw,
                  opt.deadline);
  return result;
}

void post_minimize(const SafetySpec& spec, const WinningRegion& w,
                   std::vector<OutputFunction>& functions, DependencyGraph& deps,
                   VarPool& pool, NegWMode negw, const Deadline& deadline) {
  Cnf base = spec.transition;
  base.append(w.current);
  base.append(negated_next_region(w, pool, negw, nullptr));

  for (std::size_t idx = 0; idx < functions.size(); ++idx) {
    deadline.poll();
    // Induction check with every other definition fixed; candidate
    // definitions of the current output enter behind activation literals.
    SatSession session;
    session.add_cnf(base);
    for (std::size_t j = 0; j < functions.size(); ++j) {
      if (j == idx) continue;
      session.add_cnf(
          resubstitute(Cnf{}, functions[j].ctrl_var, functions[j].func, pool));
    }

    int v = functions[idx].ctrl_var;
    auto still_inductive = [&](const Cnf& candidate) {
      int act = pool.fresh();
      Cnf def = resubstitute(Cnf{}, v, candidate, pool);
      for (const Clause& c : def.clauses()) {
        std::vector<Lit> lits(c.lits());
        lits.push_back(Lit::pos(act));
        session.add_clause(Clause(std::move(lits)));
      }
      return !session.solve(Cube{-act});
    };

    Cnf current = functions[idx].func;
    AIGSYNTH_CHECK(still_inductive(current));

    // Clause removal pass.
    std::size_t ci = 0;
    while (ci < current.clause_count()) {
      deadline.poll();
      Cnf candidate;
      for (std::size_t k = 0; k < current.clause_count(); ++k)
        if (k != ci) candidate.add_clause(current.clauses()[k]);
      if (still_inductive(candidate))
        current = candidate;
      else
        ++ci;
    }
    // Literal removal pass.
    ci = 0;
    while (ci < current.clause_count()) {
      std::size_t li = 0;
      bool clause_gone = false;
      while (li < current.clauses()[ci].size()) {
        deadline.poll();
        Clause shorter = current.clauses()[ci].without(li);
        Cnf candidate;
        for (std::size_t k = 0; k < current.clause_count(); ++k) {
          if (k == ci)
            candidate.add_clause(shorter);
          else
            candidate.add_clause(current.clauses()[k]);
        }
        if (still_inductive(candidate)) {
          current = candidate;
          if (shorter.empty()) {
            // The empty clause swallows the function; restart this index.
            clause_gone = true;
            break;
          }
        } else {
          ++li;
        }
      }
      if (!clause_gone) ++ci;
    }
    functions[idx].func = current;
  }

  // Supports shrank; rebuild the dependency edges.
  std::unordered_set<int> ctrl(spec.ctrl_vars.begin(), spec.ctrl_vars.end());
  for (const OutputFunction& f : functions) {
    std::unordered_set<int> seen;
    std::vector<int> edges;
    for (int var : f.func.vars()) {
      if (ctrl.count(var)) {
        if (seen.insert(var).second) edges.push_back(var);
      } else if (spec.gate_of.count(var)) {
        for (int s : spec.structural_support(var))
          if (ctrl.count(s) && seen.insert(s).second) edges.push_back(s);
      }
    }
    deps.set_edges(f.ctrl_var, edges);
  }
  AIGSYNTH_CHECK(deps.acyclic(spec.ctrl_vars));
}

}  // namespace aigsynth
