#include "hott/eval.hpp"

namespace hott {
namespace {

TermPtr withSub(const TermPtr& t, size_t i, TermPtr child) {
  auto copy = std::make_shared<Term>(*t);
  copy->sub[i] = std::move(child);
  return copy;
}

}  // namespace

TermPtr whnf(const GlobalEnv& env, TermPtr t) {
  for (;;) {
    switch (t->tag) {
      case Tag::Const: {
        const Declaration* d = env.find(t->name);
        if (d && d->kind == DeclKind::Definition) {
          t = d->body;
          continue;
        }
        return t;
      }
      case Tag::App: {
        TermPtr fn = whnf(env, t->sub[0]);
        if (fn->tag == Tag::Lam) {
          t = instantiate(fn->sub[0], t->sub[1]);
          continue;
        }
        return fn.get() == t->sub[0].get() ? t : withSub(t, 0, std::move(fn));
      }
      case Tag::Fst:
      case Tag::Snd: {
        TermPtr p = whnf(env, t->sub[0]);
        if (p->tag == Tag::Pair) {
          t = p->sub[t->tag == Tag::Fst ? 0 : 1];
          continue;
        }
        return p.get() == t->sub[0].get() ? t : withSub(t, 0, std::move(p));
      }
      case Tag::J: {
        TermPtr path = whnf(env, t->sub[4]);
        if (path->tag == Tag::Refl) {
          t = app(t->sub[1], path->sub[1]);
          continue;
        }
        return path.get() == t->sub[4].get() ? t : withSub(t, 4, std::move(path));
      }
      case Tag::UnitElim: {
        TermPtr s = whnf(env, t->sub[2]);
        if (s->tag == Tag::UnitVal) {
          t = t->sub[1];
          continue;
        }
        return s.get() == t->sub[2].get() ? t : withSub(t, 2, std::move(s));
      }
      case Tag::BoolElim: {
        TermPtr s = whnf(env, t->sub[3]);
        if (s->tag == Tag::BoolTrue || s->tag == Tag::BoolFalse) {
          t = t->sub[s->tag == Tag::BoolTrue ? 1 : 2];
          continue;
        }
        return s.get() == t->sub[3].get() ? t : withSub(t, 3, std::move(s));
      }
      case Tag::SigElim: {
        TermPtr s = whnf(env, t->sub[2]);
        if (s->tag == Tag::Pair) {
          // branch : Pi (a : A) (b : B a) -> motive (pair a b)
          t = app(app(t->sub[1], s->sub[0]), s->sub[1]);
          continue;
        }
        return s.get() == t->sub[2].get() ? t : withSub(t, 2, std::move(s));
      }
      default:
        return t;
    }
  }
}

namespace {

bool convWhnf(const GlobalEnv& env, const TermPtr& a, const TermPtr& b);

bool convAll(const GlobalEnv& env, const TermPtr& a, const TermPtr& b) {
  if (a->sub.size() != b->sub.size()) return false;
  for (size_t i = 0; i < a->sub.size(); ++i)
    if (!conv(env, a->sub[i], b->sub[i])) return false;
  return true;
}

// `a` is already in whnf and is Lam; eta-expand `b` and compare bodies.
bool convEta(const GlobalEnv& env, const TermPtr& lamSide, const TermPtr& other) {
  return conv(env, lamSide->sub[0], app(shift(other, 1), var(0)));
}

bool convWhnf(const GlobalEnv& env, const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->tag == Tag::Lam && b->tag != Tag::Lam) return convEta(env, a, b);
  if (b->tag == Tag::Lam && a->tag != Tag::Lam) return convEta(env, b, a);
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case Tag::Var:
    case Tag::Universe:
      return a->nat == b->nat;
    case Tag::Const:
      return a->name == b->name;
    case Tag::UnitTy:
    case Tag::UnitVal:
    case Tag::BoolTy:
    case Tag::BoolTrue:
    case Tag::BoolFalse:
    case Tag::EmptyTy:
      return true;
    default:
      return convAll(env, a, b);
  }
}

}  // namespace

bool conv(const GlobalEnv& env, const TermPtr& a, const TermPtr& b) {
  if (structEq(a, b)) return true;
  return convWhnf(env, whnf(env, a), whnf(env, b));
}

}  // namespace hott
