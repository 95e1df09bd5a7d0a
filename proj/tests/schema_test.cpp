#include "doctest.h"

#include "hott/schema.hpp"

#include <sstream>

#include "hott/driver.hpp"
#include "hott/eval.hpp"
#include "hott/printer.hpp"

using namespace hott;

namespace {

// An environment holding the paths prelude the schemas elaborate against.
GlobalEnv preludeEnv() {
  GlobalEnv env;
  DriverOptions opts;
  opts.stdlibDir = std::string(HOTT_TEST_ROOT) + "/stdlib";
  std::ostringstream out;
  int rc = runCheck({opts.stdlibDir + "/lifts.hott"}, opts, out, &env);
  REQUIRE_MESSAGE(rc == 0, out.str());
  return env;
}

WSuspSignature circleSig(std::vector<uint32_t> levels) {
  WSuspSignature sig;
  sig.name = "loopy";
  sig.B = mk(Tag::UnitTy);
  sig.C = mk(Tag::UnitTy);
  sig.A = lam(mk(Tag::UnitTy), "_b");
  sig.f = lam(mk(Tag::UnitVal), "_b");
  sig.g = lam(mk(Tag::UnitVal), "_b");
  sig.levels = std::move(levels);
  return sig;
}

}  // namespace

TEST_CASE("a W-suspension emits 3 + 6 constants per level, in a fixed order") {
  GlobalEnv env = preludeEnv();
  auto names = elaborateWSusp(env, circleSig({0}));
  REQUIRE(names.size() == 9);
  const std::vector<std::string> expected = {
      "loopy",             "loopy.pt",          "loopy.cl",
      "loopy.rec",         "loopy.ind",         "loopy.rec-beta-pt",
      "loopy.rec-beta-cl", "loopy.ind-beta-pt", "loopy.ind-beta-cl"};
  CHECK(names == expected);
  for (const auto& n : names) {
    REQUIRE(env.contains(n));
    CHECK(env.find(n)->kind == DeclKind::Generated);
    CHECK(env.find(n)->type != nullptr);
    CHECK(env.find(n)->body == nullptr);
  }

  GlobalEnv env2 = preludeEnv();
  auto two = elaborateWSusp(env2, circleSig({0, 1}));
  CHECK(two.size() == 15);
  CHECK(env2.contains("loopy.rec-1"));
  CHECK(env2.contains("loopy.ind-beta-cl-1"));
}

TEST_CASE("W-suspension elaboration is deterministic") {
  GlobalEnv a = preludeEnv();
  GlobalEnv b = preludeEnv();
  auto na = elaborateWSusp(a, circleSig({0, 1}));
  auto nb = elaborateWSusp(b, circleSig({0, 1}));
  REQUIRE(na == nb);
  for (const auto& n : na)
    CHECK(printDeclaration(*a.find(n)) == printDeclaration(*b.find(n)));
}

TEST_CASE("a truncation emits 3 + 4 constants per level") {
  GlobalEnv env = preludeEnv();
  TruncSignature sig;
  sig.name = "squash";
  sig.A = mk(Tag::BoolTy);
  sig.levels = {0};
  auto names = elaborateTrunc(env, sig);
  REQUIRE(names.size() == 7);
  const std::vector<std::string> expected = {
      "squash",          "squash.inj",      "squash.sq",      "squash.rec",
      "squash.ind",      "squash.rec-beta", "squash.ind-beta"};
  CHECK(names == expected);

  GlobalEnv env2 = preludeEnv();
  sig.levels = {0, 1};
  CHECK(elaborateTrunc(env2, sig).size() == 11);
}

TEST_CASE("schemas refuse to elaborate without the paths prelude") {
  GlobalEnv empty;
  try {
    elaborateWSusp(empty, circleSig({0}));
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    CHECK(e.kind == ErrorKind::SchemaError);
  }
  TruncSignature sig;
  sig.name = "squash";
  sig.A = mk(Tag::BoolTy);
  sig.levels = {0};
  try {
    elaborateTrunc(empty, sig);
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    CHECK(e.kind == ErrorKind::SchemaError);
  }
}

TEST_CASE("schemas reject ill-typed parameters") {
  GlobalEnv env = preludeEnv();
  WSuspSignature sig = circleSig({0});
  sig.C = mk(Tag::BoolTy);
  sig.f = lam(var(0), "_b");  // Unit -> Unit where Unit -> Bool is needed
  sig.g = lam(mk(Tag::BoolTrue), "_b");
  try {
    elaborateWSusp(env, sig);
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    CHECK(e.kind == ErrorKind::SchemaError);
  }
}
