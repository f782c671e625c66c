#pragma once

#include <cstdint>

#include "aigsynth/aig.hpp"
#include "aigsynth/cnf.hpp"
#include "aigsynth/deadline.hpp"

namespace aigsynth {

// CNF over the state variables from which the controller can stay safe
// forever, plus the same clauses over the primed copies.
struct WinningRegion {
  Cnf current;
  Cnf next;

  static WinningRegion from_current(const Cnf& w, const SafetySpec& spec) {
    return {w, spec.prime_renaming().image(w)};
  }
};

struct GameStats {
  std::uint64_t counterexamples = 0;
  std::uint64_t session_rebuilds = 0;
};

// Computes the winning region by counterexample-guided clause learning:
// states from which the environment can force the play out of the candidate
// region are generalized via QBF cores and blocked. The result is inductive
// and safe; it excludes the initial state exactly when the specification is
// unrealizable. The returned CNF is semantically simplified.
WinningRegion compute_winning_region(const SafetySpec& spec, VarPool& pool,
                                     const Deadline& deadline = Deadline{},
                                     GameStats* stats = nullptr);

// True iff the all-zero initial state satisfies the region.
bool check_realizability(const SafetySpec& spec, const WinningRegion& w);

}  // namespace aigsynth
