#pragma once

// Random well-scoped term generation shared by the property tests.

#include <random>
#include <string>
#include <vector>

#include "hott/term.hpp"

namespace testgen {

inline uint32_t pick(std::mt19937& rng, uint32_t n) {
  return std::uniform_int_distribution<uint32_t>(0, n - 1)(rng);
}

// Produces an arbitrary term whose free variables all lie below `scope`.
// Terms are not necessarily well typed; they exercise the syntax-level
// operations (shift, subst, printing, parsing, weak-head stepping).
inline hott::TermPtr genTerm(std::mt19937& rng, int depth, uint32_t scope,
                             const std::vector<std::string>& consts = {}) {
  using namespace hott;
  static const std::vector<std::string> hints = {"x", "y", "z", "f", "p"};
  auto hint = [&] { return hints[pick(rng, uint32_t(hints.size()))]; };
  auto sub = [&](uint32_t extra = 0) {
    return genTerm(rng, depth - 1, scope + extra, consts);
  };

  if (depth <= 0) {
    switch (pick(rng, 9)) {
      case 0:
        if (scope > 0) return var(pick(rng, scope));
        return mk(Tag::UnitVal);
      case 1: return universe(pick(rng, 3));
      case 2: return mk(Tag::UnitTy);
      case 3: return mk(Tag::UnitVal);
      case 4: return mk(Tag::BoolTy);
      case 5: return mk(Tag::BoolTrue);
      case 6: return mk(Tag::BoolFalse);
      case 7: return mk(Tag::EmptyTy);
      default:
        if (!consts.empty()) return constant(consts[pick(rng, uint32_t(consts.size()))]);
        return mk(Tag::BoolTy);
    }
  }
  switch (pick(rng, 15)) {
    case 0: return pi(sub(), sub(1), hint());
    case 1: return lam(sub(1), hint());
    case 2: return app(sub(), sub());
    case 3: return sigma(sub(), sub(1), hint());
    case 4: return pairTerm(sub(), sub());
    case 5: return fstTerm(sub());
    case 6: return sndTerm(sub());
    case 7: return idType(sub(), sub(), sub());
    case 8: return refl(sub(), sub());
    case 9: return jElim(sub(), sub(), sub(), sub(), sub());
    case 10: return mk(Tag::UnitElim, 0, {}, {sub(), sub(), sub()});
    case 11: return mk(Tag::BoolElim, 0, {}, {sub(), sub(), sub(), sub()});
    case 12: return mk(Tag::EmptyElim, 0, {}, {sub(), sub()});
    case 13: return mk(Tag::SigElim, 0, {}, {sub(), sub(), sub()});
    default: return sub();
  }
}

// Walks a term and randomizes every binder hint, leaving structure intact.
inline hott::TermPtr scrambleHints(std::mt19937& rng, const hott::TermPtr& t) {
  using namespace hott;
  static const std::vector<std::string> hints = {"a", "b", "c", "q", "w"};
  std::vector<TermPtr> sub;
  sub.reserve(t->sub.size());
  for (const auto& s : t->sub) sub.push_back(scrambleHints(rng, s));
  std::string name = t->name;
  if (t->tag == Tag::Pi || t->tag == Tag::Lam || t->tag == Tag::Sigma)
    name = hints[pick(rng, uint32_t(hints.size()))];
  return mk(t->tag, t->nat, std::move(name), std::move(sub));
}

}  // namespace testgen
