#pragma once

#include <vector>

#include "aigsynth/cnf.hpp"
#include "aigsynth/game.hpp"

namespace aigsynth {

// How the complement of the primed winning region enters extraction
// formulas: auxiliary-encoded, or learned as an auxiliary-free CNF.
enum class NegWMode { kAux, kLearn };

// CNF for ¬W' per the selected mode. `aux_vars` receives the fresh
// activation variables (empty in learn mode).
Cnf negated_next_region(const WinningRegion& w, VarPool& pool, NegWMode mode,
                        std::vector<int>* aux_vars);

}  // namespace aigsynth
