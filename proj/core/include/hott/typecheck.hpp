#pragma once

#include <stdexcept>
#include <string>

#include "hott/env.hpp"
#include "hott/eval.hpp"

namespace hott {

enum class ErrorKind : uint8_t {
  Mismatch,
  UnboundName,
  UniverseViolation,
  NotAFunction,
  NotAPair,
  NotAnIdType,
  SchemaError,
  CannotInfer,
  DuplicateName,
};

struct TypeError : std::runtime_error {
  ErrorKind kind;
  Span span;
  TermPtr expected;  // Mismatch: whnf of expected type
  TermPtr got;       // Mismatch: whnf of inferred type

  TypeError(ErrorKind k, Span s, std::string msg, TermPtr exp = nullptr,
            TermPtr g = nullptr)
      : std::runtime_error(std::move(msg)),
        kind(k),
        span(std::move(s)),
        expected(std::move(exp)),
        got(std::move(g)) {}
};

// Infers the unique type of a term; throws TypeError on failure.
TermPtr infer(const GlobalEnv& env, Context& ctx, const TermPtr& term);

// Checks a term against an expected (well-formed) type.
void check(const GlobalEnv& env, Context& ctx, const TermPtr& term,
           const TermPtr& expected);

// Subsumption: conv, or universe heads with level(sub) <= level(super).
bool cumul(const GlobalEnv& env, const TermPtr& sub, const TermPtr& super);

// Checks a declaration and returns the environment extended with it
// (Definition, Axiom, Postulate; schema instances are handled by the
// schema elaborator before reaching here).
void checkDeclaration(GlobalEnv& env, Declaration decl);

// Checks that `type` is a type (infers a universe) and returns its level.
uint32_t inferUniverse(const GlobalEnv& env, Context& ctx, const TermPtr& type);

}  // namespace hott
