#include "aigsynth/verify.hpp"

#include <algorithm>
#include <random>

#include "aigsynth/errors.hpp"
#include "aigsynth/sat.hpp"

namespace aigsynth {

Verdict verify_implementation(const SafetySpec& spec, const Aig& impl,
                              const WinningRegion& w) {
  if (impl.inputs.size() != spec.input_vars.size() ||
      impl.latches.size() != spec.aig.latches.size())
    throw interface_error("implementation interface does not match the spec");

  // (1) The all-zero initial state satisfies the region.
  {
    SatSession init;
    init.add_cnf(w.current);
    std::vector<Lit> zero;
    for (int v : spec.state_vars) zero.push_back(Lit::neg(v));
    Cube zero_cube(zero);
    if (!init.solve(zero_cube)) return {false, 1, zero_cube};
  }

  // (2) No region state is an error state.
  {
    SatSession safe;
    safe.add_cnf(w.current);
    safe.register_vars(spec.state_vars);
    auto r = safe.solve_assuming(Cube{spec.error_lit.dimacs()}, spec.state_vars);
    if (r.sat) return {false, 2, r.model};
  }

  // (3) Induction of the emitted circuit: W ∧ T_impl ∧ ¬W' unsatisfiable,
  // where T_impl re-encodes the implementation's own cones over the spec's
  // state/input variables (so the check is independent of how the circuit
  // was assembled). The synthetic error latch convention is mirrored.
  {
    int top = std::max(spec.transition.max_var(),
                       std::max(w.current.max_var(), w.next.max_var()));
    for (int v : spec.next_vars) top = std::max(top, v);
    VarPool pool;
    pool.reserve_through(top);

    SatSession ind;
    ind.add_cnf(w.current);
    ind.add_cnf(negate_cnf_with_aux(w.next, pool));

    std::unordered_map<unsigned, Lit> node_lit;
    for (std::size_t i = 0; i < impl.inputs.size(); ++i)
      node_lit.emplace(impl.inputs[i] >> 1, Lit::pos(spec.input_vars[i]));
    for (std::size_t i = 0; i < impl.latches.size(); ++i)
      node_lit.emplace(impl.latches[i].current >> 1,
                       Lit::pos(spec.state_vars[i]));
    ind.add_cnf(tseitin_encode_aig(impl.gates, pool, node_lit));

    int const_var = 0;
    auto impl_lit = [&](unsigned lit) -> Lit {
      unsigned var = lit >> 1;
      if (var == 0) {
        if (const_var == 0) {
          const_var = pool.fresh();
          ind.add_unit(Lit::pos(const_var));
        }
        Lit t = Lit::pos(const_var);
        return (lit & 1u) ? t : -t;  // literal 1 is true, 0 is false
      }
      Lit base = node_lit.at(var);
      return (lit & 1u) ? -base : base;
    };

    for (std::size_t i = 0; i < impl.latches.size(); ++i) {
      Lit next = impl_lit(impl.latches[i].next);
      int primed = spec.next_of.at(spec.state_vars[i]);
      ind.add_clause({-primed, next.dimacs()});
      ind.add_clause({primed, (-next).dimacs()});
    }
    if (spec.synthetic_error_latch) {
      int err = spec.state_vars.back();
      int err_next = spec.next_of.at(err);
      Lit bad = impl_lit(impl.outputs.at(0));
      ind.add_clause({-err_next, err, bad.dimacs()});
      ind.add_clause({err_next, -err});
      ind.add_clause({err_next, (-bad).dimacs()});
    }

    std::vector<int> vars;
    vars.insert(vars.end(), spec.state_vars.begin(), spec.state_vars.end());
    vars.insert(vars.end(), spec.input_vars.begin(), spec.input_vars.end());
    auto r = ind.solve_assuming(Cube{}, vars);
    if (r.sat) return {false, 3, r.model};
  }

  return {true, 0, Cube{}};
}

std::uint64_t simulate_error_runs(const Aig& impl, std::uint64_t runs,
                                  unsigned steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t bad_runs = 0;
  std::vector<std::uint8_t> value(impl.max_var + 1, 0);
  for (std::uint64_t r = 0; r < runs; ++r) {
    std::vector<std::uint8_t> state(impl.latches.size(), 0);
    bool bad = false;
    for (unsigned step = 0; step < steps && !bad; ++step) {
      std::fill(value.begin(), value.end(), 0);
      for (std::size_t i = 0; i < impl.inputs.size(); ++i)
        value[impl.inputs[i] >> 1] = static_cast<std::uint8_t>(rng() & 1);
      for (std::size_t i = 0; i < impl.latches.size(); ++i)
        value[impl.latches[i].current >> 1] = state[i];
      auto lit_val = [&](unsigned lit) -> bool {
        bool v = lit <= 1 ? (lit == 1) : value[lit >> 1];
        return (lit > 1 && (lit & 1u)) ? !v : v;
      };
      for (const AndGate& g : impl.gates)
        value[g.lhs >> 1] = lit_val(g.rhs0) && lit_val(g.rhs1);
      if (lit_val(impl.outputs.at(0))) bad = true;
      for (std::size_t i = 0; i < impl.latches.size(); ++i)
        state[i] = lit_val(impl.latches[i].next);
    }
    if (bad) ++bad_runs;
  }
  return bad_runs;
}

}  // namespace aigsynth
