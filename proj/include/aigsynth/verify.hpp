#pragma once

#include <cstdint>

#include "aigsynth/aig.hpp"
#include "aigsynth/game.hpp"

namespace aigsynth {

// Outcome of the three containment checks: (1) the initial state lies in
// the region, (2) the region avoids the error literal, (3) the region is
// inductive under the implementation's outputs. On failure, `failed_check`
// names the first violated check and `counterexample` holds a witness.
struct Verdict {
  bool pass = false;
  int failed_check = 0;
  Cube counterexample;
};

// Model check of a synthesized circuit against the specification, done by
// re-encoding the emitted circuit independently of how it was built.
Verdict verify_implementation(const SafetySpec& spec, const Aig& impl,
                              const WinningRegion& w);

// Random executions of the emitted circuit alone: `runs` runs of `steps`
// steps from the all-zero state with random uncontrollable inputs. Returns
// the number of runs that raised the error output (0 for a correct
// implementation of a realizable spec).
std::uint64_t simulate_error_runs(const Aig& impl, std::uint64_t runs,
                                  unsigned steps, std::uint64_t seed);

}  // namespace aigsynth
