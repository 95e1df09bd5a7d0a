#include "hott/printer.hpp"

#include <unordered_set>

namespace hott {
namespace {

const std::unordered_set<std::string>& keywords() {
  static const std::unordered_set<std::string> kw = {
      "def",  "axiom", "postulate", "import", "wsusp", "trunc", "Pi",
      "Sigma", "fun",  "Id",        "refl",   "J",     "pair",  "fst",
      "snd",  "Unit",  "tt",        "Bool",   "true",  "false", "Empty",
      "elim"};
  return kw;
}

bool isUniverseName(const std::string& s) {
  if (s.size() < 2 || s[0] != 'U') return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

void collectConsts(const TermPtr& t, std::unordered_set<std::string>& out) {
  if (t->tag == Tag::Const) out.insert(t->name);
  for (const auto& s : t->sub) collectConsts(s, out);
}

// Does Var(index) occur free in t?
bool occurs(const TermPtr& t, uint32_t index) {
  switch (t->tag) {
    case Tag::Var:
      return t->nat == index;
    case Tag::Pi:
    case Tag::Sigma:
      return occurs(t->sub[0], index) || occurs(t->sub[1], index + 1);
    case Tag::Lam:
      return occurs(t->sub[0], index + 1);
    default:
      // note: SigElim's branch is an ordinary function term, not an open
      // body, so no index adjustment applies to any eliminator child

      for (const auto& s : t->sub)
        if (occurs(s, index)) return true;
      return false;
  }
}

struct Printer {
  std::vector<std::string> names;          // innermost last
  std::unordered_set<std::string> taken;   // constants + enclosing binders

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() ? "x" : hint;
    if (keywords().count(base) || isUniverseName(base)) base += "'";
    std::string cand = base;
    int n = 0;
    while (taken.count(cand) ||
           std::find(names.begin(), names.end(), cand) != names.end())
      cand = base + std::to_string(++n);
    return cand;
  }

  // Precedence contexts: 0 = term (binders allowed), 1 = arrow operand /
  // builtin argument needing app level, 2 = atom.
  std::string go(const TermPtr& t, int prec) {
    switch (t->tag) {
      case Tag::Var: {
        if (t->nat < names.size()) return names[names.size() - 1 - t->nat];
        return "#" + std::to_string(t->nat);  // ill-scoped; debugging only
      }
      case Tag::Universe:
        return "U" + std::to_string(t->nat);
      case Tag::Pi: {
        if (!occurs(t->sub[1], 0)) {
          std::string dom = go(t->sub[0], 1);
          names.push_back("_");
          std::string cod = go(t->sub[1], 0);
          names.pop_back();
          return wrap(dom + " -> " + cod, prec, 0);
        }
        std::string x = fresh(t->name);
        std::string dom = go(t->sub[0], 0);
        names.push_back(x);
        std::string cod = go(t->sub[1], 0);
        names.pop_back();
        return wrap("Pi (" + x + " : " + dom + ") -> " + cod, prec, 0);
      }
      case Tag::Sigma: {
        std::string x = occurs(t->sub[1], 0) ? fresh(t->name) : "_";
        std::string fst = go(t->sub[0], 0);
        names.push_back(x);
        std::string snd = go(t->sub[1], 0);
        names.pop_back();
        return wrap("Sigma (" + x + " : " + fst + ") -> " + snd, prec, 0);
      }
      case Tag::Lam: {
        std::string x = occurs(t->sub[0], 0) ? fresh(t->name) : "_";
        names.push_back(x);
        std::string body = go(t->sub[0], 0);
        names.pop_back();
        return wrap("fun " + x + " => " + body, prec, 0);
      }
      case Tag::App:
        return wrap(go(t->sub[0], 1) + " " + go(t->sub[1], 2), prec, 1);
      case Tag::Pair:
        return head("pair", t, prec);
      case Tag::Fst:
        return head("fst", t, prec);
      case Tag::Snd:
        return head("snd", t, prec);
      case Tag::Id:
        return head("Id", t, prec);
      case Tag::Refl:
        return head("refl", t, prec);
      case Tag::J:
        return head("J", t, prec);
      case Tag::Const:
        return t->name;
      case Tag::UnitTy:
        return "Unit";
      case Tag::UnitVal:
        return "tt";
      case Tag::BoolTy:
        return "Bool";
      case Tag::BoolTrue:
        return "true";
      case Tag::BoolFalse:
        return "false";
      case Tag::EmptyTy:
        return "Empty";
      case Tag::UnitElim:
        return head("elim Unit", t, prec);
      case Tag::BoolElim:
        return head("elim Bool", t, prec);
      case Tag::EmptyElim:
        return head("elim Empty", t, prec);
      case Tag::SigElim: {
        std::string out = "elim Sigma " + go(t->sub[0], 2) + " ";
        // The branch binds two variables; it prints as an ordinary argument.
        out += go(t->sub[1], 2) + " " + go(t->sub[2], 2);
        return wrap(out, prec, 1);
      }
    }
    return "?";
  }

  std::string head(const std::string& kw, const TermPtr& t, int prec) {
    std::string out = kw;
    for (const auto& s : t->sub) out += " " + go(s, 2);
    return wrap(out, prec, 1);
  }

  static std::string wrap(std::string s, int prec, int level) {
    if (prec > level) return "(" + std::move(s) + ")";
    return s;
  }
};

}  // namespace

std::string printTerm(const TermPtr& term, const std::vector<std::string>& scope) {
  Printer p;
  p.names = scope;
  collectConsts(term, p.taken);
  return p.go(term, 0);
}

std::string printDeclaration(const Declaration& decl) {
  switch (decl.kind) {
    case DeclKind::Definition:
      return "def " + decl.name + " : " + printTerm(decl.type) + " := " +
             printTerm(decl.body);
    case DeclKind::Axiom:
    case DeclKind::Generated:
      return "axiom " + decl.name + " : " + printTerm(decl.type);
    case DeclKind::Postulate:
      return "postulate " + decl.name + " : " + printTerm(decl.type) + " \"" +
             decl.marker + "\"";
  }
  return "";
}

}  // namespace hott
