#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hott/term.hpp"

namespace hott {

struct ParseError : std::runtime_error {
  Span span;
  ParseError(Span s, std::string msg)
      : std::runtime_error(std::move(msg)), span(std::move(s)) {}
};

// One top-level declaration or schema instance, before type checking.
struct Item {
  enum class Kind { Def, Axiom, Postulate, WSusp, Trunc };
  Kind kind = Kind::Def;
  std::string name;
  TermPtr type;              // Def/Axiom/Postulate
  TermPtr body;              // Def
  std::string marker;        // Postulate reason
  TermPtr b, c, a, f, g;     // WSusp parameters (Trunc uses `a` only)
  std::vector<uint32_t> levels;  // WSusp/Trunc target levels
  Span span;
};

struct ParsedFile {
  std::vector<std::pair<std::string, Span>> imports;
  std::vector<Item> items;
  std::vector<ParseError> errors;  // per-declaration recovery
};

// Parses a whole file. Syntax errors are collected per declaration; the
// parser skips to the next top-level keyword and continues.
ParsedFile parseFile(const std::string& text, const std::string& filename);

// Parses a single term; `scope` lists binder names, innermost last.
// Throws ParseError. Used by tests and fixture files.
TermPtr parseTerm(const std::string& text, const std::string& filename,
                  std::vector<std::string> scope = {});

}  // namespace hott
