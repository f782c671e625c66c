#pragma once

#include <span>
#include <vector>

#include "aigsynth/circuit.hpp"
#include "aigsynth/deadline.hpp"
#include "aigsynth/extract.hpp"

namespace aigsynth {

struct InterpOptions {
  bool dependency_opt = true;  // dependency reordering + shared auxiliaries
  NegWMode negw = NegWMode::kAux;
  bool minimize = true;  // post-pass removing clauses/literals
  Deadline deadline;
};

// The pair of formulas characterizing where the current output must be true
// (`must_true`) and must be false (`must_false`), both CNFs over the shared
// variables `dependable` plus disjoint renamed copies.
struct MustPair {
  Cnf must_true;
  Cnf must_false;
  std::vector<int> dependable;
};

// Learns an interpolant between must_true and must_false over the shared
// variables: models of must_false ∧ candidate are generalized to cores
// against must_true and excluded. Requires must_true ∧ must_false
// unsatisfiable; a violation surfaces as strategy_conflict_error.
Cnf learn_interpolant(const Cnf& must_true, const Cnf& must_false,
                      std::span<const int> dependable, int* iterations,
                      const Deadline& deadline = Deadline{});

// Bookkeeping threaded through the per-output loop: which variables the
// current output may read, which processed outputs were renamed apart,
// admitted transition auxiliaries, and the growing dependency graph.
class InterpContext {
 public:
  InterpContext(const SafetySpec& spec, const WinningRegion& w, VarPool& pool,
                const InterpOptions& opt);

  // Outputs the function of v may reference: unprocessed ones, plus (with
  // the dependency optimization) processed outputs with no path back to v.
  std::vector<int> allowed_outputs(int v) const;
  // Transition auxiliaries whose structural support lies inside v's
  // dependable set.
  std::vector<int> admitted_aux(int v) const;
  // Shared variables for v, ordered states, inputs, outputs, auxiliaries.
  std::vector<int> dependable_vars(int v) const;

  MustPair build_must_pair(int v);
  // Records v's function: dependency edges (direct and through auxiliary
  // cones) and the resubstituted definition used by later outputs.
  void commit(int v, const Cnf& f_v);

  const DependencyGraph& deps() const { return deps_; }
  // Support of f over controllable outputs, following admitted aux cones.
  std::vector<int> output_support(const Cnf& f) const;

 private:
  const SafetySpec& spec_;
  const WinningRegion& w_;
  VarPool* pool_;
  bool dependency_opt_;
  Cnf neg_w_next_;
  std::vector<int> neg_aux_;
  std::vector<int> processed_;
  std::unordered_map<int, Cnf> def_of_;               // processed v -> encoding
  std::unordered_map<int, std::vector<int>> def_aux_;  // processed v -> aux
  DependencyGraph deps_;
};

struct InterpResult {
  std::vector<OutputFunction> functions;
  DependencyGraph deps;
  std::vector<int> iterations_per_output;
};

// Circuit extraction through interpolation with learned interpolants, one
// output after the other; with dependency_opt this is the strongest method,
// without it the plain variant used for comparison.
InterpResult extract_by_interpolation(const SafetySpec& spec,
                                      const WinningRegion& w, VarPool& pool,
                                      const InterpOptions& opt = {});

// Greedy second pass: drops every clause and literal whose removal keeps the
// combined implementation inductive. Functions are updated in place;
// dependency edges are recomputed.
void post_minimize(const SafetySpec& spec, const WinningRegion& w,
                   std::vector<OutputFunction>& functions, DependencyGraph& deps,
                   VarPool& pool, NegWMode negw,
                   const Deadline& deadline = Deadline{});

}  // namespace aigsynth
