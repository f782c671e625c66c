#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "aigsynth/cnf.hpp"

namespace aigsynth {

// And-inverter graph in AIGER literal encoding: variable v has positive
// literal 2v and negated literal 2v+1; 0 is constant false, 1 constant true.
struct Aig {
  unsigned max_var = 0;
  std::vector<unsigned> inputs;  // even literals
  struct Latch {
    unsigned current;  // even literal
    unsigned next;     // any literal; reset value is fixed to 0
  };
  std::vector<Latch> latches;
  std::vector<unsigned> outputs;
  std::vector<AndGate> gates;  // ordered by lhs after parsing
  std::vector<std::string> input_names;   // empty string = unnamed
  std::vector<std::string> latch_names;
  std::vector<std::string> output_names;

  void validate() const;
};

// ASCII AIGER ("aag"). Parsing reports the offending line on errors;
// writing emits no comment section, so well-formed files round-trip
// byte-identically modulo comments.
Aig parse_aiger(std::istream& in);
Aig parse_aiger(const std::string& text);
std::string write_aiger(const Aig& aig);

// The safety game model extracted from a specification circuit: variable
// vectors, a deterministic and complete transition relation in CNF, and the
// literal marking unsafe states.
struct SafetySpec {
  Aig aig;  // the source circuit

  std::vector<int> state_vars;    // one per latch (+ synthetic error latch)
  std::vector<int> input_vars;    // uncontrollable inputs
  std::vector<int> ctrl_vars;     // controllable inputs, declaration order
  std::vector<int> next_vars;     // primed copies, aligned with state_vars
  std::vector<int> aux_vars;      // gate variables + constant + synthetic
  Cnf transition;                 // T(x̄, ī, ō, x̄', aux)
  Lit error_lit;                  // over state_vars

  std::unordered_map<int, int> next_of;        // state var -> primed var
  std::unordered_map<int, unsigned> ctrl_lit;  // ctrl var -> AIGER input literal
  std::unordered_map<int, AndGate> gate_of;    // gate var -> defining gate
  int const_true_var = 0;                      // 0 when unused
  bool synthetic_error_latch = false;

  // Variables both current-state and primed, aligned.
  std::vector<int> all_vars_of_transition() const;
  Renaming prime_renaming() const;

  // Structural support of a variable over primaries (state/input/ctrl vars),
  // following gate definitions transitively. Primary vars map to themselves.
  std::vector<int> structural_support(int var) const;
};

// Builds the game model. Requires exactly one output (the error signal) and
// at least one controllable input (symbol name prefixed `controllable_`).
// Latch next-state functions define the primed variables, which makes the
// transition relation deterministic and complete by construction. A
// combinational error output is wrapped in a fresh absorbing error latch.
SafetySpec spec_from_aig(const Aig& aig, VarPool& pool);

inline constexpr const char* kControllablePrefix = "controllable_";

}  // namespace aigsynth
