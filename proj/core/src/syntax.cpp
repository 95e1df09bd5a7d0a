#include "hott/syntax.hpp"

namespace hott {
namespace {

// Number of binders each child of a node lives under.
uint32_t binderDepth(Tag tag, size_t child) {
  switch (tag) {
    case Tag::Pi:
    case Tag::Sigma:
      return child == 1 ? 1 : 0;
    case Tag::Lam:
      return 1;
    default:
      return 0;
  }
}

TermPtr shiftAt(const TermPtr& t, int amount, uint32_t cutoff) {
  if (t->tag == Tag::Var) {
    if (t->nat < cutoff) return t;
    int64_t idx = int64_t(t->nat) + amount;
    if (idx < 0) throw ShiftUnderflow();
    if (amount == 0) return t;
    auto v = mk(Tag::Var, uint32_t(idx));
    return v;
  }
  if (t->sub.empty()) return t;
  bool changed = false;
  std::vector<TermPtr> sub;
  sub.reserve(t->sub.size());
  for (size_t i = 0; i < t->sub.size(); ++i) {
    TermPtr c = shiftAt(t->sub[i], amount, cutoff + binderDepth(t->tag, i));
    changed = changed || c.get() != t->sub[i].get();
    sub.push_back(std::move(c));
  }
  if (!changed) return t;
  auto r = mk(t->tag, t->nat, t->name, std::move(sub));
  const_cast<Term*>(r.get())->span = t->span;
  return r;
}

TermPtr substAt(const TermPtr& t, const TermPtr& repl, uint32_t index,
                uint32_t depth) {
  if (t->tag == Tag::Var) {
    if (t->nat == index) return shift(repl, int(depth));
    if (t->nat > index) return mk(Tag::Var, t->nat - 1);
    return t;
  }
  if (t->sub.empty()) return t;
  bool changed = false;
  std::vector<TermPtr> sub;
  sub.reserve(t->sub.size());
  for (size_t i = 0; i < t->sub.size(); ++i) {
    uint32_t d = binderDepth(t->tag, i);
    TermPtr c = substAt(t->sub[i], repl, index + d, depth + d);
    changed = changed || c.get() != t->sub[i].get();
    sub.push_back(std::move(c));
  }
  if (!changed) return t;
  auto r = mk(t->tag, t->nat, t->name, std::move(sub));
  const_cast<Term*>(r.get())->span = t->span;
  return r;
}

}  // namespace

TermPtr shift(const TermPtr& term, int amount, uint32_t cutoff) {
  if (amount == 0) return term;
  return shiftAt(term, amount, cutoff);
}

TermPtr subst(const TermPtr& term, const TermPtr& replacement, uint32_t index) {
  return substAt(term, replacement, index, 0);
}

bool structEq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag || a->nat != b->nat) return false;
  if (a->tag == Tag::Const && a->name != b->name) return false;
  if (a->sub.size() != b->sub.size()) return false;
  for (size_t i = 0; i < a->sub.size(); ++i)
    if (!structEq(a->sub[i], b->sub[i])) return false;
  return true;
}

bool wellScoped(const TermPtr& term, uint32_t ctxLen) {
  if (term->tag == Tag::Var) return term->nat < ctxLen;
  for (size_t i = 0; i < term->sub.size(); ++i)
    if (!wellScoped(term->sub[i], ctxLen + binderDepth(term->tag, i)))
      return false;
  return true;
}

}  // namespace hott
