#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aigsynth/errors.hpp"

namespace aigsynth {

// A literal: a positive variable id with a polarity, stored DIMACS-style
// (+v for the variable, -v for its negation).
class Lit {
 public:
  Lit() : code_(0) {}
  explicit Lit(int dimacs) : code_(dimacs) { AIGSYNTH_CHECK(dimacs != 0); }

  static Lit pos(int var) { return Lit(var); }
  static Lit neg(int var) { return Lit(-var); }

  int var() const { return std::abs(code_); }
  bool negative() const { return code_ < 0; }
  int dimacs() const { return code_; }
  bool valid() const { return code_ != 0; }

  Lit operator-() const { return Lit(-code_); }

  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
  // Order by variable first, positive phase before negative.
  friend bool operator<(Lit a, Lit b) {
    if (a.var() != b.var()) return a.var() < b.var();
    return a.code_ > b.code_;
  }

 private:
  int code_;
};

namespace detail {
// Sorts, removes duplicates, and reports whether both phases of some
// variable are present.
bool normalize_lits(std::vector<Lit>& lits);
}  // namespace detail

// A disjunction of literals. Canonical form: sorted, duplicate-free.
// A clause containing both phases of a variable is flagged as a tautology;
// the empty clause is false.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
    tautology_ = detail::normalize_lits(lits_);
  }
  Clause(std::initializer_list<int> dimacs) {
    lits_.reserve(dimacs.size());
    for (int d : dimacs) lits_.push_back(Lit(d));
    tautology_ = detail::normalize_lits(lits_);
  }

  const std::vector<Lit>& lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool is_tautology() const { return tautology_; }
  bool contains(Lit l) const;

  // Clause with one literal dropped (by index).
  Clause without(std::size_t idx) const;

  friend bool operator==(const Clause& a, const Clause& b) {
    return a.lits_ == b.lits_;
  }

 private:
  std::vector<Lit> lits_;
  bool tautology_ = false;
};

// A conjunction of literals. Same canonical form as Clause; a cube holding
// both phases of a variable is contradictory and rejected.
class Cube {
 public:
  Cube() = default;
  explicit Cube(std::vector<Lit> lits) : lits_(std::move(lits)) {
    AIGSYNTH_CHECK(!detail::normalize_lits(lits_));
  }
  Cube(std::initializer_list<int> dimacs) {
    lits_.reserve(dimacs.size());
    for (int d : dimacs) lits_.push_back(Lit(d));
    AIGSYNTH_CHECK(!detail::normalize_lits(lits_));
  }

  const std::vector<Lit>& lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Lit l) const;

  Cube without(std::size_t idx) const;
  // Cube restricted to the given variables (order preserved).
  Cube project(std::span<const int> vars) const;

  friend bool operator==(const Cube& a, const Cube& b) {
    return a.lits_ == b.lits_;
  }

 private:
  std::vector<Lit> lits_;
};

// An ordered list of clauses. The empty CNF is true; any CNF containing the
// empty clause is false. Tautological clauses are dropped on insertion.
class Cnf {
 public:
  Cnf() = default;

  void add_clause(Clause c);
  void add_clause(std::initializer_list<int> dimacs) { add_clause(Clause(dimacs)); }
  void add_unit(Lit l) { add_clause(Clause({l.dimacs()})); }
  void append(const Cnf& other);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t clause_count() const { return clauses_.size(); }
  std::size_t literal_count() const;
  bool is_true() const { return clauses_.empty(); }
  bool has_empty_clause() const { return has_empty_; }

  int max_var() const { return max_var_; }
  // Distinct variables, ascending.
  std::vector<int> vars() const;

  friend bool operator==(const Cnf& a, const Cnf& b) {
    return a.clauses_ == b.clauses_;
  }

 private:
  std::vector<Clause> clauses_;
  bool has_empty_ = false;
  int max_var_ = 0;
};

// Issues fresh, strictly increasing variable ids and tracks named variable
// groups. Groups must be pairwise disjoint and may only contain ids that the
// pool has already handed out or reserved.
class VarPool {
 public:
  VarPool() = default;

  int fresh();
  std::vector<int> fresh_block(std::size_t n);
  // Marks 1..var as taken so fresh() never collides with externally
  // numbered variables.
  void reserve_through(int var);
  int max_allocated() const { return next_ - 1; }

  void add_group(const std::string& name, std::vector<int> vars);
  const std::vector<int>& group(const std::string& name) const;
  bool has_group(const std::string& name) const;

 private:
  int next_ = 1;
  std::map<std::string, std::vector<int>> groups_;
  std::unordered_map<int, std::string> owner_;  // var -> group name
};

// One AND gate in AIGER literal encoding: lhs must be an even literal,
// rhs0/rhs1 arbitrary literals (2v = var v, 2v+1 = its negation,
// 0 = false, 1 = true).
struct AndGate {
  unsigned lhs = 0;
  unsigned rhs0 = 0;
  unsigned rhs1 = 0;
};

// Definitional encoding of a set of AND gates. `node_lit` maps AIGER
// variable indices to CNF literals; callers pre-seed it for primary nodes,
// unseeded gate outputs receive fresh pool variables. Key 0 is the constant
// node: when a gate references constant true/false, a fresh variable is
// introduced and constrained by a unit clause.
Cnf tseitin_encode_aig(std::span<const AndGate> gates, VarPool& pool,
                       std::unordered_map<unsigned, Lit>& node_lit);

// Pieces of a CNF negation: `defs` constrains one activation literal per
// multi-literal clause (k implies the clause's literals all false), and
// `disjuncts` lists the literals whose disjunction asserts "some clause of f
// is false". Unit clauses contribute their negated literal directly.
// `always_true` is set when f is already false (negation needs no clause).
struct NegationParts {
  Cnf defs;
  std::vector<Lit> disjuncts;
  std::vector<int> aux_vars;
  bool always_true = false;
};

NegationParts cnf_negation_parts(const Cnf& f, VarPool& pool);

// CNF equisatisfiability-faithful negation: for every assignment to f's
// variables the result is extendable to a model iff f is false there.
Cnf negate_cnf_with_aux(const Cnf& f, VarPool& pool);
Cnf negate_cnf_with_aux(const Cnf& f, VarPool& pool, std::vector<int>* aux_vars);

// A variable substitution built from renaming.
class Renaming {
 public:
  Renaming() = default;
  explicit Renaming(std::unordered_map<int, int> map) : map_(std::move(map)) {}

  int image_var(int var) const;
  Lit image(Lit l) const;
  Clause image(const Clause& c) const;
  Cnf image(const Cnf& f) const;
  Cube image(const Cube& c) const;

  const std::unordered_map<int, int>& map() const { return map_; }
  bool empty() const { return map_.empty(); }

 private:
  std::unordered_map<int, int> map_;
};

// Replaces every occurrence of a variable in `group` by a fresh copy;
// variables outside the group are untouched. The map covers all of `group`,
// including variables that do not occur in f.
std::pair<Cnf, Renaming> rename_apart(const Cnf& f, std::span<const int> group,
                                      VarPool& pool);

std::string to_string(Lit l);
std::string to_string(const Clause& c);
std::string to_string(const Cube& c);
std::string to_string(const Cnf& f);

}  // namespace aigsynth
