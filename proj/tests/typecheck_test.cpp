#include "doctest.h"

#include "hott/typecheck.hpp"

#include <functional>

#include "hott/parser.hpp"

using namespace hott;

namespace {

ErrorKind kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const TypeError& e) {
    return e.kind;
  }
  FAIL("expected a TypeError");
  return ErrorKind::Mismatch;
}

Span here() {
  Span s;
  s.line = s.endLine = 1;
  s.col = s.endCol = 1;
  return s;
}

}  // namespace

TEST_CASE("universe inference and hierarchy") {
  GlobalEnv env;
  Context ctx;
  CHECK(structEq(infer(env, ctx, universe(0)), universe(1)));
  CHECK(structEq(infer(env, ctx, universe(3)), universe(4)));
  CHECK(structEq(infer(env, ctx, mk(Tag::UnitTy)), universe(0)));
  CHECK(structEq(infer(env, ctx, mk(Tag::BoolTy)), universe(0)));
  // a quantification over U0 lands one level up
  CHECK(structEq(infer(env, ctx, pi(universe(0), var(0))), universe(1)));
}

TEST_CASE("cumulativity is one-directional and lives in the checker") {
  GlobalEnv env;
  Context ctx;
  CHECK(cumul(env, universe(0), universe(0)));
  CHECK(cumul(env, universe(0), universe(2)));
  CHECK_FALSE(cumul(env, universe(2), universe(0)));
  // Unit : U0 also checks against the larger U3
  check(env, ctx, mk(Tag::UnitTy), universe(3));
  // but a universe never inhabits itself
  ErrorKind k = kindOf([&] { check(env, ctx, universe(1), universe(1)); });
  CHECK((k == ErrorKind::Mismatch || k == ErrorKind::UniverseViolation));
}

TEST_CASE("introduction forms check against their types") {
  GlobalEnv env;
  Context ctx;
  check(env, ctx, lam(var(0)), pi(mk(Tag::BoolTy), mk(Tag::BoolTy)));
  check(env, ctx, pairTerm(mk(Tag::BoolTrue), mk(Tag::UnitVal)),
        sigma(mk(Tag::BoolTy), mk(Tag::UnitTy)));
  check(env, ctx, refl(mk(Tag::BoolTy), mk(Tag::BoolTrue)),
        idType(mk(Tag::BoolTy), mk(Tag::BoolTrue), mk(Tag::BoolTrue)));

  // a bare pair has no principal type
  CHECK(kindOf([&] {
          infer(env, ctx, pairTerm(mk(Tag::BoolTrue), mk(Tag::UnitVal)));
        }) == ErrorKind::CannotInfer);
  // a lambda against a sigma type is a mismatch
  CHECK(kindOf([&] {
          check(env, ctx, lam(var(0)), sigma(mk(Tag::BoolTy), mk(Tag::BoolTy)));
        }) == ErrorKind::Mismatch);
}

TEST_CASE("elimination forms reject bad scrutinees") {
  GlobalEnv env;
  Context ctx;
  CHECK(kindOf([&] { infer(env, ctx, fstTerm(mk(Tag::BoolTrue))); }) ==
        ErrorKind::NotAPair);
  CHECK(kindOf([&] {
          infer(env, ctx, app(mk(Tag::BoolTrue), mk(Tag::UnitVal)));
        }) == ErrorKind::NotAFunction);
  CHECK(kindOf([&] {
          infer(env, ctx,
                jElim(lam(lam(lam(mk(Tag::BoolTy)))), lam(mk(Tag::BoolTrue)),
                      mk(Tag::BoolTrue), mk(Tag::BoolTrue), mk(Tag::UnitVal)));
        }) == ErrorKind::NotAnIdType);
  CHECK(kindOf([&] { infer(env, ctx, var(0)); }) == ErrorKind::UnboundName);
  CHECK(kindOf([&] { infer(env, ctx, constant("ghost")); }) ==
        ErrorKind::UnboundName);
}

TEST_CASE("refl endpoints must match the ascribed identity type") {
  GlobalEnv env;
  Context ctx;
  CHECK(kindOf([&] {
          check(env, ctx, refl(mk(Tag::BoolTy), mk(Tag::BoolTrue)),
                idType(mk(Tag::BoolTy), mk(Tag::BoolTrue), mk(Tag::BoolFalse)));
        }) == ErrorKind::Mismatch);
}

TEST_CASE("J demands a motive over both endpoints and the path") {
  GlobalEnv env;
  Context ctx;
  TermPtr b = mk(Tag::BoolTy);
  TermPtr tr = mk(Tag::BoolTrue);
  TermPtr path = refl(b, tr);
  // well-formed: 3-argument motive, 1-argument base family
  TermPtr good = parseTerm(
      "J (fun x y p => Bool) (fun x => x) true true (refl Bool true)", "<j>");
  CHECK(structEq(whnf(env, infer(env, ctx, good)), b));
  // a motive with too few arguments is rejected
  TermPtr shortMotive = parseTerm(
      "J (fun x y => Bool) (fun x => x) true true (refl Bool true)", "<j>");
  CHECK_THROWS_AS(infer(env, ctx, shortMotive), TypeError);
  // mismatched endpoints are rejected with a mismatch diagnostic
  GlobalEnv env2;
  Declaration ax;
  ax.name = "q";
  ax.kind = DeclKind::Axiom;
  ax.type = idType(b, tr, mk(Tag::BoolFalse));
  env2.add(std::move(ax));
  TermPtr wrongEnds = parseTerm(
      "J (fun x y p => Bool) (fun x => x) true true q", "<j>");
  CHECK(kindOf([&] { infer(env2, ctx, wrongEnds); }) == ErrorKind::Mismatch);
}

TEST_CASE("declaration checking rejects duplicates and records bodies") {
  GlobalEnv env;
  Declaration d;
  d.name = "b0";
  d.kind = DeclKind::Definition;
  d.type = universe(1);
  d.body = universe(0);
  d.span = here();
  checkDeclaration(env, d);
  REQUIRE(env.contains("b0"));
  CHECK(env.find("b0")->kind == DeclKind::Definition);

  Declaration dup = d;
  CHECK(kindOf([&] { checkDeclaration(env, dup); }) == ErrorKind::DuplicateName);

  Declaration bad;
  bad.name = "b1";
  bad.kind = DeclKind::Definition;
  bad.type = mk(Tag::BoolTy);
  bad.body = mk(Tag::UnitVal);
  bad.span = here();
  CHECK(kindOf([&] { checkDeclaration(env, bad); }) == ErrorKind::Mismatch);
}

TEST_CASE("mismatch diagnostics carry the expected and inferred forms") {
  GlobalEnv env;
  Context ctx;
  try {
    check(env, ctx, mk(Tag::UnitVal), mk(Tag::BoolTy));
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    CHECK(e.kind == ErrorKind::Mismatch);
    REQUIRE(e.expected != nullptr);
    REQUIRE(e.got != nullptr);
    CHECK(e.expected->tag == Tag::BoolTy);
    CHECK(e.got->tag == Tag::UnitTy);
  }
  // terms that came through the parser report a source position
  try {
    Context ctx2;
    infer(env, ctx2, parseTerm("fst true", "<span>"));
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    CHECK(e.span.known());
  }
}
