#pragma once

#include <string>
#include <vector>

#include "hott/env.hpp"
#include "hott/term.hpp"

namespace hott {

// Renders a term in surface syntax. The output re-parses (in the same scope)
// to a term structurally equal to the input; binder hints are freshened
// against enclosing binders and every constant mentioned in the term.
std::string printTerm(const TermPtr& term,
                      const std::vector<std::string>& scope = {});

// Renders a declaration as a surface-syntax line ("def n : T := b",
// "axiom n : T", ...). Generated declarations render as axioms.
std::string printDeclaration(const Declaration& decl);

}  // namespace hott
