#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hott/span.hpp"

namespace hott {

// Core term language in nameless (de Bruijn) form. Binder names survive only
// as printing hints and are ignored by structural equality.
enum class Tag : uint8_t {
  Var,       // nat = index
  Universe,  // nat = level
  Pi,        // sub = {domain, codomain+1}
  Lam,       // sub = {body+1}
  App,       // sub = {fn, arg}
  Sigma,     // sub = {first, second+1}
  Pair,      // sub = {fst, snd}
  Fst,       // sub = {pair}
  Snd,       // sub = {pair}
  Id,        // sub = {type, lhs, rhs}
  Refl,      // sub = {type, point}
  J,         // sub = {motive, base, lhs, rhs, path}
  Const,     // name = global identifier
  UnitTy,
  UnitVal,
  BoolTy,
  BoolTrue,
  BoolFalse,
  EmptyTy,
  UnitElim,   // sub = {motive, branch, scrutinee}
  BoolElim,   // sub = {motive, trueBranch, falseBranch, scrutinee}
  EmptyElim,  // sub = {motive, scrutinee}
  SigElim,    // sub = {motive, branch, scrutinee}; branch is a 2-ary function
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  Tag tag;
  uint32_t nat = 0;          // Var index or Universe level
  std::string name;          // Const name, or binder hint for Pi/Lam/Sigma
  std::vector<TermPtr> sub;  // children, see Tag comments
  Span span;

  Term(Tag t, uint32_t n, std::string nm, std::vector<TermPtr> s)
      : tag(t), nat(n), name(std::move(nm)), sub(std::move(s)) {}
};

inline TermPtr mk(Tag t, uint32_t n = 0, std::string name = {},
                  std::vector<TermPtr> sub = {}) {
  return std::make_shared<Term>(t, n, std::move(name), std::move(sub));
}

inline TermPtr var(uint32_t i) { return mk(Tag::Var, i); }
inline TermPtr universe(uint32_t lvl) { return mk(Tag::Universe, lvl); }
inline TermPtr pi(TermPtr dom, TermPtr cod, std::string hint = "x") {
  return mk(Tag::Pi, 0, std::move(hint), {std::move(dom), std::move(cod)});
}
inline TermPtr lam(TermPtr body, std::string hint = "x") {
  return mk(Tag::Lam, 0, std::move(hint), {std::move(body)});
}
inline TermPtr app(TermPtr fn, TermPtr arg) {
  return mk(Tag::App, 0, {}, {std::move(fn), std::move(arg)});
}
inline TermPtr app(TermPtr fn, std::initializer_list<TermPtr> args) {
  TermPtr t = std::move(fn);
  for (const auto& a : args) t = app(t, a);
  return t;
}
inline TermPtr sigma(TermPtr fst, TermPtr snd, std::string hint = "x") {
  return mk(Tag::Sigma, 0, std::move(hint), {std::move(fst), std::move(snd)});
}
inline TermPtr pairTerm(TermPtr a, TermPtr b) {
  return mk(Tag::Pair, 0, {}, {std::move(a), std::move(b)});
}
inline TermPtr fstTerm(TermPtr p) { return mk(Tag::Fst, 0, {}, {std::move(p)}); }
inline TermPtr sndTerm(TermPtr p) { return mk(Tag::Snd, 0, {}, {std::move(p)}); }
inline TermPtr idType(TermPtr ty, TermPtr l, TermPtr r) {
  return mk(Tag::Id, 0, {}, {std::move(ty), std::move(l), std::move(r)});
}
inline TermPtr refl(TermPtr ty, TermPtr pt) {
  return mk(Tag::Refl, 0, {}, {std::move(ty), std::move(pt)});
}
inline TermPtr jElim(TermPtr motive, TermPtr base, TermPtr lhs, TermPtr rhs,
                     TermPtr path) {
  return mk(Tag::J, 0, {},
            {std::move(motive), std::move(base), std::move(lhs), std::move(rhs),
             std::move(path)});
}
inline TermPtr constant(std::string name) {
  return mk(Tag::Const, 0, std::move(name));
}

}  // namespace hott
