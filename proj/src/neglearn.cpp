#include "aigsynth/neglearn.hpp"

#include "aigsynth/checks.hpp"
#include "aigsynth/sat.hpp"

namespace aigsynth {

Cnf neg_learn(const Cnf& f, const Deadline& deadline) {
  std::vector<int> vars = f.vars();
  VarPool pool;
  pool.reserve_through(f.max_var());

  SatSession candidate;  // holds f ∧ N', gains one clause per iteration
  candidate.add_cnf(f);
  candidate.register_vars(vars);

  SatSession negation;  // core target: auxiliary-encoded ¬f, fixed
  negation.add_cnf(negate_cnf_with_aux(f, pool));
  negation.register_vars(vars);

  // One clause per model of f in the worst case; exceeding 2^|vars| would
  // mean a generalization failed to block its own model.
  std::uint64_t cap = vars.size() >= 63
                          ? ~0ull
                          : (1ull << vars.size()) + 1;

  Cnf learned;
  for (std::uint64_t round = 0;; ++round) {
    deadline.poll();
    if (round > cap)
      throw internal_error("negation learning exceeded its iteration bound");
    auto r = candidate.solve_assuming(Cube{}, vars);
    if (!r.sat) break;
    Cube core = unsat_core_min(r.model, negation);
    std::vector<Lit> lits;
    lits.reserve(core.size());
    for (Lit l : core.lits()) lits.push_back(-l);
    Clause block(std::move(lits));
    learned.add_clause(block);
    candidate.add_clause(block);
  }
  return learned;
}

}  // namespace aigsynth
