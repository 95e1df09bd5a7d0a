#pragma once

#include <string>
#include <vector>

#include "hott/env.hpp"
#include "hott/typecheck.hpp"

namespace hott {

struct WSuspSignature {
  std::string name;
  TermPtr B, C, A, f, g;          // B,C : U0, A : B -> U0, f,g : B -> C
  std::vector<uint32_t> levels;   // target universes for rec/ind
  Span span;
};

struct TruncSignature {
  std::string name;
  TermPtr A;                      // A : U0
  std::vector<uint32_t> levels;
  Span span;
};

// Elaborates a W-suspension: emits the type former, the point and cell
// constructors, and per target level a recursor, an inductor, and four
// propositional computation laws. Every emitted constant is type-checked and
// added to the environment. Throws TypeError (SchemaError kind for missing
// prelude names or bad parameters).
std::vector<std::string> elaborateWSusp(GlobalEnv& env,
                                        const WSuspSignature& sig);

// Elaborates a propositional truncation: type former, `inj`, `sq`, and per
// target level a recursor, an inductor, and the two point computation laws.
// No cell-level law is emitted.
std::vector<std::string> elaborateTrunc(GlobalEnv& env,
                                        const TruncSignature& sig);

}  // namespace hott
