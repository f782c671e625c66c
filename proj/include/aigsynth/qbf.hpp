#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "aigsynth/cnf.hpp"
#include "aigsynth/deadline.hpp"
#include "aigsynth/sat.hpp"

namespace aigsynth {

// Prenex ∃-∀-∃ prefix. Blocks are pairwise disjoint; every matrix variable
// must belong to exactly one block.
struct QuantPrefix {
  std::vector<int> outer_exists;
  std::vector<int> forall;
  std::vector<int> inner_exists;
};

// Solver for ∃ū ∀v̄ₐ ∃v̄ₑ: matrix, realized as counterexample-guided
// expansion over SAT sessions. Clause additions are incremental: new matrix
// clauses are pushed into the abstraction and all existing expansion copies.
class QbfSession {
 public:
  QbfSession(QuantPrefix prefix, VarPool& pool);

  void add_clause(const Clause& c);
  void add_cnf(const Cnf& f);

  const QuantPrefix& prefix() const { return prefix_; }
  std::size_t matrix_clause_count() const { return matrix_.clause_count(); }
  std::size_t expansion_count() const { return expansions_.size(); }

  struct Result {
    bool sat = false;
    Cube outer_model;  // witnesses the outer block on a SAT verdict
  };

  Result solve() { return solve_assuming(Cube{}, Deadline{}); }
  Result solve_assuming(const Cube& outer_assumptions,
                        const Deadline& deadline = Deadline{});

  // Shrinks `start` (over the outer block) to a locally minimal sub-cube
  // under which the remaining QBF is still false. Throws contract_error when
  // the QBF holds under `start`.
  Cube core(const Cube& start, const Deadline& deadline = Deadline{});

 private:
  enum class Block { kOuter, kForall, kInner };
  struct Expansion {
    Cube forall_model;
    Renaming inner_copy;
  };

  Block block_of(int var) const;
  void push_into_abstraction(const Clause& c, const Expansion& e);
  void add_expansion(const Cube& forall_model);
  // Decides ∀forall ∃inner: matrix under the fixed outer cube; returns a
  // counterexample forall-assignment when the check fails.
  bool find_forall_counterexample(const Cube& outer_model, Cube& out_cex,
                                  const Deadline& deadline);

  QuantPrefix prefix_;
  VarPool* pool_;
  Cnf matrix_;
  SatSession abstraction_;   // over outer block plus expansion copies
  SatSession matrix_check_;  // full matrix, queried under assumptions
  std::vector<Expansion> expansions_;
  std::unordered_map<int, Block> block_of_;
  Cube failed_;
};

// QDIMACS text with an ∃∀∃-compatible prefix (fewer blocks are padded with
// empty ones; free variables join the outer block).
struct QdimacsProblem {
  QuantPrefix prefix;
  Cnf matrix;
};

QdimacsProblem parse_qdimacs(std::istream& in);
QdimacsProblem parse_qdimacs(const std::string& text);

}  // namespace aigsynth
