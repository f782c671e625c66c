#pragma once

#include <span>
#include <vector>

#include "aigsynth/circuit.hpp"
#include "aigsynth/deadline.hpp"
#include "aigsynth/extract.hpp"

namespace aigsynth {

struct QbfLearnResult {
  std::vector<OutputFunction> functions;  // each over state ∪ input vars
  std::vector<int> iterations_per_output;
};

// Learns one output function by QBF refinement: while some context (over
// `u_vars`, with the not-yet-fixed outputs `remaining_outputs` universal)
// admits no safe continuation with v true, a core of that context is mapped
// to false. The core session's matrix never changes during the loop.
Cnf learn_output_function_qbf(const Cnf& not_strategy,
                              std::span<const int> u_vars,
                              std::span<const int> remaining_outputs, int v,
                              VarPool& pool, int* iterations,
                              const Deadline& deadline = Deadline{});

// Circuit extraction by QBF-based CNF learning, one output after the other
// in declaration order, refining the strategy with each finished function.
QbfLearnResult extract_by_qbf_learning(const SafetySpec& spec,
                                       const WinningRegion& w, VarPool& pool,
                                       NegWMode negw = NegWMode::kAux,
                                       const Deadline& deadline = Deadline{});

}  // namespace aigsynth
