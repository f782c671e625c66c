#pragma once

#include "aigsynth/cnf.hpp"
#include "aigsynth/deadline.hpp"

namespace aigsynth {

// Learns a CNF equivalent to ¬f over exactly f's variables, without
// auxiliary variables: counterexample models of f ∧ candidate are
// generalized to cores against an auxiliary-encoded ¬f and blocked. The
// candidate only ever gains clauses.
Cnf neg_learn(const Cnf& f, const Deadline& deadline = Deadline{});

}  // namespace aigsynth
