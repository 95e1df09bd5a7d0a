#pragma once

#include "hott/env.hpp"
#include "hott/term.hpp"

namespace hott {

// Weak-head normalization. Applies beta, pair projections, Unit/Bool/Sigma
// eliminator computation, the J rule on refl, and unfolding of Definition-kind
// constants at head position. Axioms, postulates, and schema-generated
// constants are opaque.
TermPtr whnf(const GlobalEnv& env, TermPtr term);

// Definitional equality: syntax-directed comparison of weak-head normal forms
// with eta for functions and no eta for pairs. Universes compare by exact
// level; cumulativity lives in the checker.
bool conv(const GlobalEnv& env, const TermPtr& a, const TermPtr& b);

}  // namespace hott
