#include "hott/parser.hpp"

#include <cctype>

#include "hott/syntax.hpp"

namespace hott {
namespace {

enum class Tok {
  Ident,
  Number,
  Universe,
  String,
  LParen,
  RParen,
  Colon,
  ColonEq,
  Arrow,
  DArrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  uint32_t number = 0;
  Span span;
};

bool identStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool identBody(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
         c == '.';
}

struct Lexer {
  const std::string& src;
  std::shared_ptr<const std::string> file;
  size_t pos = 0;
  int line = 1, col = 1;

  Lexer(const std::string& s, const std::string& filename)
      : src(s), file(std::make_shared<std::string>(filename)) {}

  char peek(size_t off = 0) const {
    return pos + off < src.size() ? src[pos + off] : '\0';
  }

  void advance() {
    if (pos >= src.size()) return;
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  Span here() const { return Span{file, line, col, line, col}; }

  [[noreturn]] void err(const std::string& msg) const {
    throw ParseError(here(), msg);
  }

  void skipTrivia() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        while (peek() != '\n' && peek() != '\0') advance();
      } else if (c == '{' && peek(1) == '-') {
        Span start = here();
        advance();
        advance();
        int depth = 1;
        while (depth > 0) {
          if (peek() == '\0')
            throw ParseError(start, "unterminated block comment");
          if (peek() == '{' && peek(1) == '-') {
            advance();
            advance();
            ++depth;
          } else if (peek() == '-' && peek(1) == '}') {
            advance();
            advance();
            --depth;
          } else {
            advance();
          }
        }
      } else {
        return;
      }
    }
  }

  Token next() {
    skipTrivia();
    Token t;
    t.span = here();
    char c = peek();
    if (c == '\0') {
      t.kind = Tok::End;
      return t;
    }
    if (c == '(') {
      advance();
      t.kind = Tok::LParen;
    } else if (c == ')') {
      advance();
      t.kind = Tok::RParen;
    } else if (c == ':') {
      advance();
      if (peek() == '=') {
        advance();
        t.kind = Tok::ColonEq;
      } else {
        t.kind = Tok::Colon;
      }
    } else if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      t.kind = Tok::Arrow;
    } else if (c == '=' && peek(1) == '>') {
      advance();
      advance();
      t.kind = Tok::DArrow;
    } else if (c == '"') {
      advance();
      t.kind = Tok::String;
      while (peek() != '"') {
        if (peek() == '\0' || peek() == '\n')
          throw ParseError(t.span, "unterminated string literal");
        t.text += peek();
        advance();
      }
      advance();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      uint64_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        n = n * 10 + uint64_t(peek() - '0');
        if (n > 1000000) err("numeric literal too large");
        t.text += peek();
        advance();
      }
      t.number = uint32_t(n);
    } else if (identStart(c)) {
      while (identBody(peek()) ||
             (peek() == '-' && identBody(peek(1))) ||
             (peek() == '/' && (identStart(peek(1)) || peek(1) == '.'))) {
        t.text += peek();
        advance();
      }
      // U<digits> is a universe literal, everything else an identifier.
      if (t.text.size() >= 2 && t.text[0] == 'U') {
        bool allDigits = true;
        for (size_t i = 1; i < t.text.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
            allDigits = false;
        if (allDigits) {
          t.kind = Tok::Universe;
          uint64_t n = 0;
          for (size_t i = 1; i < t.text.size(); ++i) {
            n = n * 10 + uint64_t(t.text[i] - '0');
            if (n > 1000) err("universe level too large");
          }
          t.number = uint32_t(n);
          t.span.endLine = line;
          t.span.endCol = col - 1;
          return t;
        }
      }
      t.kind = Tok::Ident;
    } else {
      err(std::string("unexpected character '") + c + "'");
    }
    t.span.endLine = line;
    t.span.endCol = col > 1 ? col - 1 : col;
    return t;
  }
};

const char* const kTopKeywords[] = {"def",   "axiom", "postulate",
                                    "import", "wsusp", "trunc"};

bool isTopKeyword(const std::string& s) {
  for (const char* k : kTopKeywords)
    if (s == k) return true;
  return false;
}

bool isReserved(const std::string& s) {
  static const char* const kw[] = {"Pi",   "Sigma", "fun",  "Id",    "refl",
                                   "J",    "pair",  "fst",  "snd",   "Unit",
                                   "tt",   "Bool",  "true", "false", "Empty",
                                   "elim"};
  if (isTopKeyword(s)) return true;
  for (const char* k : kw)
    if (s == k) return true;
  return false;
}

TermPtr withSpan(TermPtr t, const Span& s) {
  const_cast<Term*>(t.get())->span = s;
  return t;
}

struct Parser {
  Lexer lex;
  Token tok;
  std::vector<std::string> scope;  // binder names, innermost last

  Parser(const std::string& text, const std::string& filename)
      : lex(text, filename) {
    tok = lex.next();
  }

  void bump() { tok = lex.next(); }

  [[noreturn]] void err(const std::string& msg) const {
    throw ParseError(tok.span, msg);
  }

  bool atIdent(const char* word) const {
    return tok.kind == Tok::Ident && tok.text == word;
  }

  void expect(Tok k, const char* what) {
    if (tok.kind != k) err(std::string("expected ") + what);
    bump();
  }

  std::string expectName(const char* what) {
    if (tok.kind != Tok::Ident) err(std::string("expected ") + what);
    if (isReserved(tok.text))
      err("'" + tok.text + "' is a reserved word");
    std::string s = tok.text;
    bump();
    return s;
  }

  std::string expectBinderName() {
    if (tok.kind != Tok::Ident) err("expected a binder name");
    if (isReserved(tok.text)) err("'" + tok.text + "' is a reserved word");
    std::string s = tok.text;
    bump();
    return s;
  }

  // ---- terms ----

  TermPtr term() {
    Span start = tok.span;
    if (atIdent("Pi") || atIdent("Sigma")) {
      bool isPi = tok.text == "Pi";
      bump();
      std::vector<std::pair<std::string, TermPtr>> binders;
      if (tok.kind != Tok::LParen) err("expected '(' after binder keyword");
      while (tok.kind == Tok::LParen) {
        bump();
        std::vector<std::string> names;
        while (tok.kind == Tok::Ident && !isReserved(tok.text))
          names.push_back(expectBinderName());
        if (names.empty()) err("expected binder names");
        expect(Tok::Colon, "':'");
        TermPtr dom = term();
        expect(Tok::RParen, "')'");
        for (size_t i = 0; i < names.size(); ++i) {
          binders.emplace_back(names[i], shift(dom, int(i)));
          scope.push_back(names[i]);
        }
      }
      expect(Tok::Arrow, "'->'");
      TermPtr body = term();
      for (size_t i = binders.size(); i-- > 0;) {
        scope.pop_back();
        auto& [nm, dom] = binders[i];
        body = withSpan(isPi ? pi(dom, body, nm) : sigma(dom, body, nm), start);
      }
      return body;
    }
    if (atIdent("fun")) {
      bump();
      std::vector<std::string> names;
      while (tok.kind == Tok::Ident && !isReserved(tok.text))
        names.push_back(expectBinderName());
      if (names.empty()) err("expected binder names after 'fun'");
      expect(Tok::DArrow, "'=>'");
      for (const auto& n : names) scope.push_back(n);
      TermPtr body = term();
      for (size_t i = names.size(); i-- > 0;) {
        scope.pop_back();
        body = withSpan(lam(body, names[i]), start);
      }
      return body;
    }
    TermPtr lhs = appChain();
    if (tok.kind == Tok::Arrow) {
      bump();
      TermPtr rhs = term();
      return withSpan(pi(lhs, shift(rhs, 1), "_"), start);
    }
    return lhs;
  }

  bool atAtomStart() const {
    if (tok.kind == Tok::LParen || tok.kind == Tok::Universe) return true;
    if (tok.kind != Tok::Ident) return false;
    return !isTopKeyword(tok.text) && tok.text != "at" &&
           !isHeadKeyword(tok.text) &&
           tok.text != "Pi" && tok.text != "Sigma" && tok.text != "fun";
  }

  static bool isHeadKeyword(const std::string& s) {
    return s == "Id" || s == "refl" || s == "J" || s == "pair" || s == "fst" ||
           s == "snd" || s == "elim";
  }

  TermPtr appChain() {
    Span start = tok.span;
    TermPtr head;
    if (tok.kind == Tok::Ident && isHeadKeyword(tok.text)) {
      std::string kw = tok.text;
      bump();
      if (kw == "Id")
        head = node(Tag::Id, 3, start);
      else if (kw == "refl")
        head = node(Tag::Refl, 2, start);
      else if (kw == "J")
        head = node(Tag::J, 5, start);
      else if (kw == "pair")
        head = node(Tag::Pair, 2, start);
      else if (kw == "fst")
        head = node(Tag::Fst, 1, start);
      else if (kw == "snd")
        head = node(Tag::Snd, 1, start);
      else {  // elim
        if (tok.kind != Tok::Ident) err("expected a type after 'elim'");
        std::string ty = tok.text;
        bump();
        if (ty == "Unit")
          head = node(Tag::UnitElim, 3, start);
        else if (ty == "Bool")
          head = node(Tag::BoolElim, 4, start);
        else if (ty == "Empty")
          head = node(Tag::EmptyElim, 2, start);
        else if (ty == "Sigma")
          head = node(Tag::SigElim, 3, start);
        else
          err("'elim' expects Unit, Bool, Empty, or Sigma");
      }
    } else {
      head = atom();
    }
    while (atAtomStart())
      head = withSpan(app(std::move(head), atom()), start);
    return head;
  }

  TermPtr node(Tag tag, int arity, const Span& start) {
    std::vector<TermPtr> args;
    for (int i = 0; i < arity; ++i) {
      if (!atAtomStart()) err("missing argument of builtin form");
      args.push_back(atom());
    }
    return withSpan(mk(tag, 0, {}, std::move(args)), start);
  }

  TermPtr atom() {
    Span start = tok.span;
    switch (tok.kind) {
      case Tok::Universe: {
        uint32_t lvl = tok.number;
        bump();
        return withSpan(universe(lvl), start);
      }
      case Tok::LParen: {
        bump();
        TermPtr t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Ident: {
        std::string name = tok.text;
        if (name == "Unit") return litAtom(Tag::UnitTy);
        if (name == "tt") return litAtom(Tag::UnitVal);
        if (name == "Bool") return litAtom(Tag::BoolTy);
        if (name == "true") return litAtom(Tag::BoolTrue);
        if (name == "false") return litAtom(Tag::BoolFalse);
        if (name == "Empty") return litAtom(Tag::EmptyTy);
        if (isReserved(name) || isHeadKeyword(name))
          err("'" + name + "' cannot appear as a bare atom");
        bump();
        for (size_t i = scope.size(); i-- > 0;)
          if (scope[i] == name)
            return withSpan(var(uint32_t(scope.size() - 1 - i)), start);
        return withSpan(constant(name), start);
      }
      default:
        err("expected a term");
    }
  }

  TermPtr litAtom(Tag tag) {
    Span s = tok.span;
    bump();
    return withSpan(mk(tag), s);
  }

  // ---- declarations ----

  TermPtr namedParam(const char* pname) {
    expect(Tok::LParen, "'('");
    if (!atIdent(pname))
      err(std::string("expected parameter '") + pname + "'");
    bump();
    expect(Tok::ColonEq, "':='");
    TermPtr t = term();
    expect(Tok::RParen, "')'");
    return t;
  }

  std::vector<uint32_t> levelList() {
    std::vector<uint32_t> levels;
    if (atIdent("at")) {
      bump();
      if (!atIdent("levels")) err("expected 'levels'");
      bump();
      while (tok.kind == Tok::Number) {
        levels.push_back(tok.number);
        bump();
      }
      if (levels.empty()) err("expected at least one level");
    } else {
      levels = {0, 1};
    }
    return levels;
  }

  Item declaration() {
    Item item;
    item.span = tok.span;
    std::string kw = tok.text;
    bump();
    if (kw == "def") {
      item.kind = Item::Kind::Def;
      item.name = expectName("a name after 'def'");
      expect(Tok::Colon, "':'");
      item.type = term();
      expect(Tok::ColonEq, "':='");
      item.body = term();
    } else if (kw == "axiom" || kw == "postulate") {
      item.kind = kw == "axiom" ? Item::Kind::Axiom : Item::Kind::Postulate;
      item.name = expectName("a name");
      expect(Tok::Colon, "':'");
      item.type = term();
      if (tok.kind == Tok::String) {
        item.marker = tok.text;
        bump();
      } else if (item.kind == Item::Kind::Postulate) {
        err("postulate requires a reason string");
      }
    } else if (kw == "wsusp") {
      item.kind = Item::Kind::WSusp;
      item.name = expectName("a name after 'wsusp'");
      item.b = namedParam("B");
      item.c = namedParam("C");
      item.a = namedParam("A");
      item.f = namedParam("f");
      item.g = namedParam("g");
      item.levels = levelList();
    } else if (kw == "trunc") {
      item.kind = Item::Kind::Trunc;
      item.name = expectName("a name after 'trunc'");
      item.a = namedParam("A");
      item.levels = levelList();
    } else {
      throw ParseError(item.span, "expected a declaration");
    }
    return item;
  }

  // Skips to the next top-level keyword, swallowing further lexer errors so
  // recovery always makes progress.
  void skipToTopKeyword() {
    for (;;) {
      if (tok.kind == Tok::End) return;
      if (tok.kind == Tok::Ident && isTopKeyword(tok.text)) return;
      try {
        bump();
      } catch (const ParseError&) {
        lex.advance();
        try {
          tok = lex.next();
        } catch (const ParseError&) {
          tok.kind = Tok::Ident;
          tok.text.clear();
        }
      }
    }
  }

  void file(ParsedFile& out) {
    while (atIdent("import")) {
      Span s = tok.span;
      try {
        bump();
        if (tok.kind != Tok::Ident) {
          out.errors.emplace_back(tok.span, "expected an import path");
        } else {
          out.imports.emplace_back(tok.text, s);
          bump();
        }
      } catch (const ParseError& e) {
        out.errors.push_back(e);
        skipToTopKeyword();
      }
    }
    while (tok.kind != Tok::End) {
      if (!(tok.kind == Tok::Ident && isTopKeyword(tok.text))) {
        out.errors.emplace_back(tok.span, "expected a declaration");
        skipToTopKeyword();
        continue;
      }
      if (tok.text == "import") {
        out.errors.emplace_back(tok.span,
                                "imports must precede all declarations");
        skipToTopKeyword();
        continue;
      }
      try {
        out.items.push_back(declaration());
      } catch (const ParseError& e) {
        out.errors.push_back(e);
        skipToTopKeyword();
      }
    }
  }
};

}  // namespace

ParsedFile parseFile(const std::string& text, const std::string& filename) {
  ParsedFile out;
  try {
    Parser p(text, filename);
    p.file(out);
  } catch (const ParseError& e) {
    out.errors.push_back(e);
  }
  return out;
}

TermPtr parseTerm(const std::string& text, const std::string& filename,
                  std::vector<std::string> scope) {
  Parser p(text, filename);
  p.scope = std::move(scope);
  TermPtr t = p.term();
  if (p.tok.kind != Tok::End)
    throw ParseError(p.tok.span, "trailing input after term");
  return t;
}

}  // namespace hott
