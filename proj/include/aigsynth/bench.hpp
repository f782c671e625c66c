#pragma once

#include <string>

#include "aigsynth/aig.hpp"

namespace aigsynth {

enum class BenchKind { kAdd, kMult };

// Combinational-function specifications as safety games: two n-bit operands
// arrive as uncontrollable inputs, the controllable outputs must equal a
// reference network (ripple-carry adder / shift-add multiplier), and a
// mismatch raises the error signal. The adder records the mismatch in a
// delay latch feeding an absorbing error latch; the multiplier keeps the
// mismatch combinational.
Aig gen_benchmark(BenchKind kind, unsigned bits);

std::string bench_name(BenchKind kind, unsigned bits);

}  // namespace aigsynth
