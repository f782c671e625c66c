#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace aigsynth {

// Conflict-driven SAT solver with incremental clause addition, assumption
// solving, and failed-assumption extraction. Literals use the DIMACS
// convention (+v / -v). Deterministic: no randomized decisions.
class Solver {
 public:
  Solver();

  void ensure_var(int var);
  int num_vars() const { return static_cast<int>(activity_.size()) - 1; }

  // Returns false when the database became trivially unsatisfiable.
  bool add_clause(std::span<const int> dimacs);
  bool add_clause(std::initializer_list<int> dimacs) {
    return add_clause(std::span<const int>(dimacs.begin(), dimacs.size()));
  }

  bool ok() const { return ok_; }

  // True = satisfiable under the assumptions.
  bool solve(std::span<const int> assumptions_dimacs);
  bool solve() { return solve(std::span<const int>{}); }

  // Valid after a SAT verdict; variables never mentioned default to false.
  bool model_value(int var) const;

  // Valid after an UNSAT verdict under assumptions: a subset of the given
  // assumption literals that already makes the database unsatisfiable.
  const std::vector<int>& failed_assumptions() const { return conflict_out_; }

  std::uint64_t conflicts() const { return stat_conflicts_; }
  std::uint64_t decisions() const { return stat_decisions_; }
  std::uint64_t propagations() const { return stat_propagations_; }

 private:
  // Internal literal encoding: 2*var for positive, 2*var+1 for negative.
  static int ilit(int dimacs) {
    int v = dimacs < 0 ? -dimacs : dimacs;
    return 2 * v + (dimacs < 0 ? 1 : 0);
  }
  static int inot(int l) { return l ^ 1; }
  static int ivar(int l) { return l >> 1; }
  static int idimacs(int l) { return (l & 1) ? -(l >> 1) : (l >> 1); }

  struct Cls {
    std::vector<int> lits;  // internal encoding
    double act = 0.0;
    bool learnt = false;
    bool deleted = false;
  };
  struct Watch {
    int cref;
    int blocker;
  };

  enum : std::int8_t { kUnset = 0, kTrue = 1, kFalse = -1 };

  std::int8_t lit_value(int l) const {
    std::int8_t a = assign_[ivar(l)];
    if (a == kUnset) return kUnset;
    return (l & 1) ? static_cast<std::int8_t>(-a) : a;
  }
  bool lit_true(int l) const { return lit_value(l) == kTrue; }
  bool lit_false(int l) const { return lit_value(l) == kFalse; }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  void new_decision_level() { trail_lim_.push_back(static_cast<int>(trail_.size())); }

  void attach_clause(int cref);
  void enqueue(int l, int reason_cref);
  int propagate();  // returns conflicting cref or -1
  void cancel_until(int level);
  void analyze(int confl, std::vector<int>& out_learnt, int& out_btlevel);
  void analyze_final(int false_assumption_ilit,
                     std::span<const int> assumptions_dimacs);
  int pick_branch_lit();
  void bump_var(int var);
  void bump_clause(Cls& c);
  void decay_activities();
  void reduce_db();
  void heap_insert(int var);
  int heap_pop();
  void heap_update_up(int var);
  bool heap_less(int a, int b) const;
  void heap_sift_up(int pos);
  void heap_sift_down(int pos);

  std::vector<Cls> clauses_;
  std::vector<int> learnt_refs_;
  std::vector<std::vector<Watch>> watches_;  // indexed by internal literal
  std::vector<std::int8_t> assign_;          // by var
  std::vector<int> level_;                   // by var
  std::vector<int> reason_;                  // by var, cref or -1
  std::vector<int> trail_;                   // internal literals
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<double> activity_;  // by var; index 0 unused
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  std::vector<std::uint8_t> polarity_;  // saved phase, 1 = true
  std::vector<std::uint8_t> seen_;
  std::vector<int> heap_;      // max-activity binary heap of vars
  std::vector<int> heap_pos_;  // by var, -1 if absent

  bool ok_ = true;
  std::vector<int> conflict_out_;  // DIMACS failed assumptions
  std::vector<std::int8_t> model_;

  std::uint64_t stat_conflicts_ = 0;
  std::uint64_t stat_decisions_ = 0;
  std::uint64_t stat_propagations_ = 0;
  std::uint64_t max_learnts_ = 4000;
};

}  // namespace aigsynth
