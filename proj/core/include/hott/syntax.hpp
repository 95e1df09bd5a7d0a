#pragma once

#include <stdexcept>

#include "hott/term.hpp"

namespace hott {

struct ShiftUnderflow : std::runtime_error {
  ShiftUnderflow() : std::runtime_error("shift would produce a negative index") {}
};

// Adjusts every free Var with index >= cutoff by `amount`.
// Throws ShiftUnderflow if a negative shift crosses zero.
TermPtr shift(const TermPtr& term, int amount, uint32_t cutoff = 0);

// Capture-avoiding substitution of `replacement` for Var(index); free variables
// above `index` are re-numbered down by one.
TermPtr subst(const TermPtr& term, const TermPtr& replacement, uint32_t index = 0);

// Structural (alpha-) equality: identical trees with names erased.
bool structEq(const TermPtr& a, const TermPtr& b);

// True iff every Var index is bound or < ctxLen at its point of use.
bool wellScoped(const TermPtr& term, uint32_t ctxLen = 0);

// Instantiates a 1-binder body with an argument (a beta step).
inline TermPtr instantiate(const TermPtr& body, const TermPtr& arg) {
  return subst(body, arg, 0);
}

}  // namespace hott
