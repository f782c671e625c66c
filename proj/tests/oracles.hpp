#pragma once

// Brute-force reference procedures the test suites check the real
// implementations against. Everything here enumerates assignments directly
// and never touches the solver stack.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "aigsynth/cnf.hpp"
#include "aigsynth/qbf.hpp"

namespace oracles {

using aigsynth::Clause;
using aigsynth::Cnf;
using aigsynth::Cube;
using aigsynth::Lit;
using aigsynth::QuantPrefix;

// Assignment as bitmask over `vars` (bit i = vars[i]).
inline bool lit_holds(Lit l, const std::vector<int>& vars, std::uint64_t mask) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == l.var()) return ((mask >> i) & 1u) != l.negative();
  return false;  // variables outside the universe read as false
}

inline bool clause_holds(const Clause& c, const std::vector<int>& vars,
                         std::uint64_t mask) {
  for (Lit l : c.lits())
    if (lit_holds(l, vars, mask)) return true;
  return false;
}

inline bool cnf_holds(const Cnf& f, const std::vector<int>& vars,
                      std::uint64_t mask) {
  for (const Clause& c : f.clauses())
    if (!clause_holds(c, vars, mask)) return false;
  return true;
}

inline bool cube_holds(const Cube& c, const std::vector<int>& vars,
                       std::uint64_t mask) {
  for (Lit l : c.lits())
    if (!lit_holds(l, vars, mask)) return false;
  return true;
}

// All satisfying assignments of f over `vars` (vars must cover f).
inline std::set<std::uint64_t> all_models(const Cnf& f,
                                          const std::vector<int>& vars) {
  std::set<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (1ull << vars.size()); ++m)
    if (cnf_holds(f, vars, m)) out.insert(m);
  return out;
}

// Models of f over `outer_vars` after existentially projecting away every
// other variable of f.
inline std::set<std::uint64_t> projected_models(
    const Cnf& f, const std::vector<int>& outer_vars) {
  std::vector<int> all = f.vars();
  std::vector<int> extra;
  for (int v : all) {
    bool outer = false;
    for (int o : outer_vars)
      if (o == v) outer = true;
    if (!outer) extra.push_back(v);
  }
  std::vector<int> universe = outer_vars;
  universe.insert(universe.end(), extra.begin(), extra.end());
  std::uint64_t keep =
      outer_vars.empty() ? 0 : ((1ull << outer_vars.size()) - 1);
  std::set<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (1ull << universe.size()); ++m)
    if (cnf_holds(f, universe, m)) out.insert(m & keep);
  return out;
}

inline bool cnf_equivalent(const Cnf& a, const Cnf& b,
                           const std::vector<int>& vars) {
  for (std::uint64_t m = 0; m < (1ull << vars.size()); ++m)
    if (cnf_holds(a, vars, m) != cnf_holds(b, vars, m)) return false;
  return true;
}

// Full quantifier-tree evaluation of ∃outer ∀forall ∃inner: matrix, with an
// optional restriction cube over the outer block.
inline bool eval_qbf(const QuantPrefix& p, const Cnf& matrix,
                     const Cube& outer_restriction = Cube{}) {
  std::vector<int> universe = p.outer_exists;
  universe.insert(universe.end(), p.forall.begin(), p.forall.end());
  universe.insert(universe.end(), p.inner_exists.begin(), p.inner_exists.end());
  std::size_t no = p.outer_exists.size();
  std::size_t na = p.forall.size();
  std::size_t ni = p.inner_exists.size();

  for (std::uint64_t mo = 0; mo < (1ull << no); ++mo) {
    if (!cube_holds(outer_restriction, p.outer_exists, mo)) continue;
    bool all_forall_ok = true;
    for (std::uint64_t ma = 0; ma < (1ull << na) && all_forall_ok; ++ma) {
      bool some_inner = false;
      for (std::uint64_t mi = 0; mi < (1ull << ni); ++mi) {
        std::uint64_t full = mo | (ma << no) | (mi << (no + na));
        if (cnf_holds(matrix, universe, full)) {
          some_inner = true;
          break;
        }
      }
      if (!some_inner) all_forall_ok = false;
    }
    if (all_forall_ok) return true;
  }
  return false;
}

// Deterministic random CNF over vars 1..nvars.
inline Cnf random_cnf(std::mt19937& rng, int nvars, int nclauses,
                      int max_width = 3) {
  std::uniform_int_distribution<int> width(1, max_width);
  std::uniform_int_distribution<int> var(1, nvars);
  std::uniform_int_distribution<int> sign(0, 1);
  Cnf f;
  for (int i = 0; i < nclauses; ++i) {
    std::vector<Lit> lits;
    int w = width(rng);
    for (int k = 0; k < w; ++k) {
      int v = var(rng);
      lits.push_back(sign(rng) ? Lit::pos(v) : Lit::neg(v));
    }
    f.add_clause(Clause(std::move(lits)));
  }
  return f;
}

}  // namespace oracles
