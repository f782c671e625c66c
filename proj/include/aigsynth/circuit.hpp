#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "aigsynth/aig.hpp"
#include "aigsynth/cnf.hpp"

namespace aigsynth {

// One synthesized controllable output: a CNF function over variables the
// output is allowed to read (states, uncontrollable inputs, other outputs,
// admitted transition auxiliaries).
struct OutputFunction {
  int ctrl_var = 0;
  Cnf func;
};

// Directed edges v -> w meaning v's function references w (directly or via
// an admitted auxiliary's cone). Must stay acyclic.
class DependencyGraph {
 public:
  void set_edges(int from, std::vector<int> to);
  const std::vector<int>& edges(int from) const;
  bool has_path(int from, int to) const;
  bool acyclic(const std::vector<int>& nodes) const;
  // Referenced outputs first.
  std::vector<int> build_order(const std::vector<int>& nodes) const;

 private:
  std::map<int, std::vector<int>> adj_;
};

// Conjoins an encoding of (v <-> f_v) onto the strategy CNF. The forward
// direction adds ¬v to each clause of f_v; the backward direction reuses the
// negation machinery, one auxiliary per multi-literal clause. Fresh
// auxiliaries are reported through `new_aux` when requested.
Cnf resubstitute(const Cnf& strategy, int v, const Cnf& f_v, VarPool& pool,
                 std::vector<int>* new_aux = nullptr);

// Incremental AIG construction with constant folding and structural hashing
// (no two AND nodes share an ordered operand pair).
class AigBuilder {
 public:
  unsigned add_input(const std::string& name);
  unsigned add_latch(const std::string& name);
  void set_latch_next(unsigned latch_lit, unsigned next_lit);
  void add_output(unsigned lit, const std::string& name);

  static unsigned negate(unsigned lit) { return lit ^ 1u; }
  unsigned make_and(unsigned a, unsigned b);
  unsigned make_or(unsigned a, unsigned b);
  unsigned make_xor(unsigned a, unsigned b);
  unsigned make_and(const std::vector<unsigned>& lits);  // empty -> true
  unsigned make_or(const std::vector<unsigned>& lits);   // empty -> false

  Aig finish() const;

 private:
  std::vector<unsigned> inputs_;
  std::vector<std::string> input_names_;
  std::vector<Aig::Latch> latches_;
  std::vector<std::string> latch_names_;
  std::vector<unsigned> outputs_;
  std::vector<std::string> output_names_;
  std::vector<AndGate> gates_;
  std::unordered_map<std::uint64_t, unsigned> strash_;
  unsigned next_lit_ = 2;
};

// Assembles the final circuit: the spec's uncontrollable inputs and latches,
// the synthesized functions instantiated in dependency order with admitted
// auxiliary cones inlined, the original next-state and error cones rewired
// onto the synthesized outputs.
Aig build_implementation(const SafetySpec& spec,
                         const std::vector<OutputFunction>& functions,
                         const DependencyGraph& deps);

}  // namespace aigsynth
