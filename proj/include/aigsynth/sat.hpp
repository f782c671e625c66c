#pragma once

#include <memory>
#include <span>
#include <vector>

#include "aigsynth/cnf.hpp"
#include "aigsynth/solver.hpp"

namespace aigsynth {

// Incremental SAT session: a monotonically growing clause database queried
// under assumptions. Single-owner; distinct sessions are independent.
class SatSession {
 public:
  SatSession();

  void add_clause(const Clause& c);
  void add_clause(std::span<const Lit> lits);
  void add_clause(std::initializer_list<int> dimacs) { add_clause(Clause(dimacs)); }
  void add_cnf(const Cnf& f);
  void add_unit(Lit l);

  // Makes variables known so they appear in models even when unconstrained.
  void register_vars(std::span<const int> vars);

  struct Result {
    bool sat = false;
    Cube model;  // assigns every projection variable
  };

  // Verdict plus a model over `projection` (in the given order).
  Result solve_assuming(const Cube& assumptions, std::span<const int> projection);
  bool solve(const Cube& assumptions);
  bool solve() { return solve(Cube{}); }

  // Valid after an UNSAT verdict under assumptions; subset of them, in cube
  // canonical order.
  const Cube& last_failed_assumptions() const { return failed_; }

  std::size_t clause_count() const { return clause_count_; }
  std::uint64_t solve_count() const { return solve_count_; }

 private:
  Solver solver_;
  Cube failed_;
  std::size_t clause_count_ = 0;
  std::uint64_t solve_count_ = 0;
};

// Shrinks `start` to a locally minimal sub-cube that is still inconsistent
// with the session's formula: after the literal iteration, dropping any
// single literal makes the conjunction satisfiable. Throws contract_error
// when start is consistent with the formula.
Cube unsat_core_min(const Cube& start, SatSession& formula);
Cube unsat_core_min(const Cube& start, const Cnf& formula);

// Semantic simplification: removes clauses implied by the rest and literals
// whose removal keeps the clause implied, one pass each. The result is
// logically equivalent to the input and never larger.
Cnf simplify_cnf(const Cnf& f);

}  // namespace aigsynth
