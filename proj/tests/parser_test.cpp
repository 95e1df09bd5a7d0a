#include "doctest.h"

#include "hott/parser.hpp"

#include <random>
#include <string>

#include "gen.hpp"
#include "hott/printer.hpp"
#include "hott/syntax.hpp"

using namespace hott;

TEST_CASE("printTerm output re-parses to a structurally equal term") {
  std::mt19937 rng(201);
  const std::vector<std::string> consts = {"k0", "my-const", "circle.pt"};
  int checked = 0;
  for (int it = 0; it < 1000; ++it) {
    uint32_t n = testgen::pick(rng, 3);
    std::vector<std::string> scope;
    for (uint32_t i = 0; i < n; ++i) scope.push_back("v" + std::to_string(i));
    TermPtr t = testgen::genTerm(rng, 5, n, consts);
    std::string text = printTerm(t, scope);
    TermPtr back = parseTerm(text, "<round-trip>", scope);
    REQUIRE_MESSAGE(structEq(t, back), "failed on: " << text);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("parser does not crash on random byte input") {
  std::mt19937 rng(202);
  std::uniform_int_distribution<int> byte(0, 255);
  int survived = 0;
  for (int it = 0; it < 10000; ++it) {
    size_t len = testgen::pick(rng, 201);
    std::string text;
    text.reserve(len);
    for (size_t i = 0; i < len; ++i) text.push_back(char(byte(rng)));
    // parseFile collects errors instead of throwing
    ParsedFile pf = parseFile(text, "<fuzz>");
    (void)pf;
    // parseTerm throws ParseError and nothing else
    try {
      parseTerm(text, "<fuzz>");
    } catch (const ParseError&) {
    }
    ++survived;
  }
  CHECK(survived == 10000);
}

TEST_CASE("declaration forms parse") {
  const std::string src =
      "import prelude\n"
      "\n"
      "def id0 : Pi (A : U0) -> A -> A := fun A a => a\n"
      "axiom oracle : U0\n"
      "postulate gap : U0 \"left as an interface\"\n"
      "wsusp circ (B := Unit) (C := Unit) (A := fun b => Unit)\n"
      "  (f := fun b => tt) (g := fun b => tt)\n"
      "trunc sq (A := Bool) at levels 0 1\n";
  ParsedFile pf = parseFile(src, "decls.hott");
  REQUIRE(pf.errors.empty());
  REQUIRE(pf.imports.size() == 1);
  CHECK(pf.imports[0].first == "prelude");
  REQUIRE(pf.items.size() == 5);
  CHECK(pf.items[0].kind == Item::Kind::Def);
  CHECK(pf.items[0].name == "id0");
  CHECK(pf.items[0].type != nullptr);
  CHECK(pf.items[0].body != nullptr);
  CHECK(pf.items[1].kind == Item::Kind::Axiom);
  CHECK(pf.items[1].body == nullptr);
  CHECK(pf.items[2].kind == Item::Kind::Postulate);
  CHECK(pf.items[2].marker == "left as an interface");
  CHECK(pf.items[3].kind == Item::Kind::WSusp);
  CHECK(pf.items[3].b != nullptr);
  CHECK(pf.items[3].g != nullptr);
  CHECK(pf.items[4].kind == Item::Kind::Trunc);
  CHECK(pf.items[4].a != nullptr);
  CHECK(pf.items[4].levels == std::vector<uint32_t>{0, 1});
}

TEST_CASE("a postulate requires a reason string") {
  ParsedFile pf = parseFile("postulate gap : U0\n", "bad.hott");
  CHECK_FALSE(pf.errors.empty());
}

TEST_CASE("the parser recovers at the next top-level keyword") {
  const std::string src =
      "def broken : := fun x => x\n"
      "def fine : U1 := U0\n";
  ParsedFile pf = parseFile(src, "recover.hott");
  CHECK(pf.errors.size() == 1);
  REQUIRE(pf.items.size() >= 1);
  CHECK(pf.items.back().name == "fine");
}

TEST_CASE("parse errors carry positions") {
  try {
    parseTerm("fun x =>", "<pos>");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.span.known());
  }
  ParsedFile pf = parseFile("def x : U0 :=\n", "pos.hott");
  REQUIRE_FALSE(pf.errors.empty());
  CHECK(pf.errors[0].span.known());
}

TEST_CASE("scope resolves names to indices, innermost last") {
  TermPtr t = parseTerm("a b", "<scope>", {"a", "b"});
  CHECK(structEq(t, app(var(1), var(0))));
  // an identifier not in scope becomes a constant reference
  TermPtr c = parseTerm("loose", "<scope>", {"a"});
  CHECK(c->tag == Tag::Const);
  CHECK(c->name == "loose");
}
