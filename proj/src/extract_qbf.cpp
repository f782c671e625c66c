#include "aigsynth/extract_qbf.hpp"

#include <algorithm>
#include <unordered_set>

#include "aigsynth/checks.hpp"
#include "aigsynth/neglearn.hpp"
#include "aigsynth/qbf.hpp"

namespace aigsynth {

Cnf negated_next_region(const WinningRegion& w, VarPool& pool, NegWMode mode,
                        std::vector<int>* aux_vars) {
  if (mode == NegWMode::kLearn) {
    if (aux_vars) aux_vars->clear();
    return neg_learn(w.next);
  }
  std::vector<int> aux;
  Cnf out = negate_cnf_with_aux(w.next, pool, &aux);
  if (aux_vars) *aux_vars = std::move(aux);
  return out;
}

namespace {

QuantPrefix prefix_for(const Cnf& matrix, std::span<const int> u_vars,
                       std::span<const int> remaining_outputs, int v) {
  QuantPrefix p;
  p.outer_exists.assign(u_vars.begin(), u_vars.end());
  p.forall.assign(remaining_outputs.begin(), remaining_outputs.end());
  std::unordered_set<int> placed(p.outer_exists.begin(), p.outer_exists.end());
  placed.insert(p.forall.begin(), p.forall.end());
  p.inner_exists.push_back(v);
  placed.insert(v);
  for (int var : matrix.vars())
    if (placed.insert(var).second) p.inner_exists.push_back(var);
  return p;
}

}  // namespace

Cnf learn_output_function_qbf(const Cnf& not_strategy,
                              std::span<const int> u_vars,
                              std::span<const int> remaining_outputs, int v,
                              VarPool& pool, int* iterations,
                              const Deadline& deadline) {
  // Refinement session: ∃ū ∀v̄ₐ ∃v̄ₑ: v ∧ ¬S ∧ f_v-so-far.
  QuantPrefix p = prefix_for(not_strategy, u_vars, remaining_outputs, v);
  QbfSession refine(p, pool);
  refine.add_cnf(not_strategy);
  refine.add_clause(Clause({v}));

  // Core session: same shape with v forced false; its matrix stays fixed.
  QbfSession core(p, pool);
  core.add_cnf(not_strategy);
  core.add_clause(Clause({-v}));
  const std::size_t core_matrix_size = core.matrix_clause_count();

  Cnf f;
  int iter = 0;
  while (true) {
    deadline.poll();
    auto r = refine.solve_assuming(Cube{}, deadline);
    if (!r.sat) break;
    ++iter;
    Cube u2;
    try {
      u2 = core.core(r.outer_model, deadline);
    } catch (const contract_error&) {
      throw strategy_conflict_error(
          "output " + std::to_string(v) +
          " is forced both ways for some context; the strategy is "
          "inconsistent");
    }
    std::vector<Lit> lits;
    lits.reserve(u2.size());
    for (Lit l : u2.lits()) lits.push_back(-l);
    Clause block(std::move(lits));
    f.add_clause(block);
    refine.add_clause(block);
    AIGSYNTH_CHECK(core.matrix_clause_count() == core_matrix_size);
  }
  if (iterations) *iterations = iter;
  return f;
}

QbfLearnResult extract_by_qbf_learning(const SafetySpec& spec,
                                       const WinningRegion& w, VarPool& pool,
                                       NegWMode negw, const Deadline& deadline) {
  std::vector<int> u_vars = spec.state_vars;
  u_vars.insert(u_vars.end(), spec.input_vars.begin(), spec.input_vars.end());

  Cnf not_strategy = spec.transition;
  not_strategy.append(w.current);
  not_strategy.append(negated_next_region(w, pool, negw, nullptr));

  QbfLearnResult result;
  for (std::size_t k = 0; k < spec.ctrl_vars.size(); ++k) {
    int v = spec.ctrl_vars[k];
    std::vector<int> remaining(spec.ctrl_vars.begin() + k + 1,
                               spec.ctrl_vars.end());
    int iterations = 0;
    Cnf f = learn_output_function_qbf(not_strategy, u_vars, remaining, v, pool,
                                      &iterations, deadline);
    result.functions.push_back({v, f});
    result.iterations_per_output.push_back(iterations);
    not_strategy = resubstitute(not_strategy, v, f, pool);
  }
  return result;
}

}  // namespace aigsynth
