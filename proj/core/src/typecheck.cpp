#include "hott/typecheck.hpp"

#include "hott/printer.hpp"

namespace hott {
namespace {

[[noreturn]] void fail(ErrorKind k, const Span& s, std::string msg,
                       TermPtr expected = nullptr, TermPtr got = nullptr) {
  throw TypeError(k, s, std::move(msg), std::move(expected), std::move(got));
}

TermPtr expectPi(const GlobalEnv& env, const TermPtr& ty, const Span& s,
                 const char* what) {
  TermPtr w = whnf(env, ty);
  if (w->tag != Tag::Pi)
    fail(ErrorKind::NotAFunction, s,
         std::string(what) + " has type " + printTerm(w) +
             ", which is not a function type");
  return w;
}

// Checks that `fam` is a type family over the given binder domains
// (fam : Pi domains -> U_l for some level l). A family literal is peeled
// lambda by lambda so its codomain universe can be inferred; anything else
// must have an inferable Pi-into-universe type.
void checkFamily(const GlobalEnv& env, Context& ctx, const TermPtr& fam,
                 const std::vector<TermPtr>& domains) {
  TermPtr cur = fam;
  size_t peeled = 0;
  while (peeled < domains.size() && cur->tag == Tag::Lam) {
    ctx.push(domains[peeled]);
    cur = cur->sub[0];
    ++peeled;
  }
  if (cur->tag == Tag::Lam) {
    for (size_t i = 0; i < peeled; ++i) ctx.pop();
    fail(ErrorKind::Mismatch, fam->span,
         "motive takes too many arguments (expected " +
             std::to_string(domains.size()) + ")");
  }
  uint32_t level = 0;
  try {
    if (peeled == domains.size()) {
      level = inferUniverse(env, ctx, cur);
    } else {
      // The rest of the family is not a literal; destructure its type.
      TermPtr ty = whnf(env, infer(env, ctx, cur));
      for (size_t i = peeled; i < domains.size(); ++i) {
        if (ty->tag != Tag::Pi || !conv(env, ty->sub[0], domains[i]))
          fail(ErrorKind::Mismatch, fam->span,
               "motive domain mismatch: expected a family over " +
                   printTerm(domains[i]),
               domains[i], ty);
        ty = whnf(env, ty->sub[1]);
      }
      if (ty->tag != Tag::Universe)
        fail(ErrorKind::UniverseViolation, fam->span,
             "motive must land in a universe");
      level = ty->nat;
    }
  } catch (...) {
    for (size_t i = 0; i < peeled; ++i) ctx.pop();
    throw;
  }
  for (size_t i = 0; i < peeled; ++i) ctx.pop();
  // Rebuild the expected family type and check the original term against it,
  // so partially-literal motives are validated in full.
  TermPtr expected = universe(level);
  for (size_t i = domains.size(); i-- > 0;) expected = pi(domains[i], expected);
  check(env, ctx, fam, expected);
}

// Checks `motive : scrutTy -> U` with inferred target universe.
void checkMotive(const GlobalEnv& env, Context& ctx, const TermPtr& motive,
                 const TermPtr& scrutTy) {
  checkFamily(env, ctx, motive, {scrutTy});
}

}  // namespace

uint32_t inferUniverse(const GlobalEnv& env, Context& ctx, const TermPtr& type) {
  TermPtr u = whnf(env, infer(env, ctx, type));
  if (u->tag != Tag::Universe)
    fail(ErrorKind::UniverseViolation, type->span,
         printTerm(type) + " is not a type (its type is " + printTerm(u) + ")");
  return u->nat;
}

TermPtr infer(const GlobalEnv& env, Context& ctx, const TermPtr& t) {
  switch (t->tag) {
    case Tag::Var:
      if (!ctx.inScope(t->nat))
        fail(ErrorKind::UnboundName, t->span,
             "variable index " + std::to_string(t->nat) + " out of scope");
      return ctx.lookup(t->nat);

    case Tag::Universe:
      return universe(t->nat + 1);

    case Tag::Pi:
    case Tag::Sigma: {
      uint32_t l1 = inferUniverse(env, ctx, t->sub[0]);
      ctx.push(t->sub[0]);
      uint32_t l2 = inferUniverse(env, ctx, t->sub[1]);
      ctx.pop();
      return universe(std::max(l1, l2));
    }

    case Tag::Lam:
      fail(ErrorKind::CannotInfer, t->span,
           "cannot infer the type of a bare function; a function literal only "
           "appears where a function type is expected");

    case Tag::App: {
      TermPtr fnTy = expectPi(env, infer(env, ctx, t->sub[0]), t->span,
                              "application head");
      check(env, ctx, t->sub[1], fnTy->sub[0]);
      return instantiate(fnTy->sub[1], t->sub[1]);
    }

    case Tag::Pair:
      fail(ErrorKind::CannotInfer, t->span,
           "cannot infer the type of a bare pair; a pair literal only appears "
           "where a pair type is expected");

    case Tag::Fst:
    case Tag::Snd: {
      TermPtr pty = whnf(env, infer(env, ctx, t->sub[0]));
      if (pty->tag != Tag::Sigma)
        fail(ErrorKind::NotAPair, t->span,
             "projection applied to a term of type " + printTerm(pty) +
                 ", which is not a pair type");
      if (t->tag == Tag::Fst) return pty->sub[0];
      return instantiate(pty->sub[1], fstTerm(t->sub[0]));
    }

    case Tag::Id: {
      uint32_t lvl = inferUniverse(env, ctx, t->sub[0]);
      check(env, ctx, t->sub[1], t->sub[0]);
      check(env, ctx, t->sub[2], t->sub[0]);
      return universe(lvl);
    }

    case Tag::Refl: {
      inferUniverse(env, ctx, t->sub[0]);
      check(env, ctx, t->sub[1], t->sub[0]);
      return idType(t->sub[0], t->sub[1], t->sub[1]);
    }

    case Tag::J: {
      // The path argument determines the underlying type A.
      TermPtr pathTy = whnf(env, infer(env, ctx, t->sub[4]));
      if (pathTy->tag != Tag::Id)
        fail(ErrorKind::NotAnIdType, t->sub[4]->span,
             "J expects a path; its last argument has type " +
                 printTerm(pathTy));
      TermPtr a = pathTy->sub[0];
      check(env, ctx, t->sub[2], a);
      check(env, ctx, t->sub[3], a);
      if (!conv(env, pathTy->sub[1], t->sub[2]) ||
          !conv(env, pathTy->sub[2], t->sub[3]))
        fail(ErrorKind::Mismatch, t->sub[4]->span,
             "path endpoints do not match the J arguments",
             idType(a, t->sub[2], t->sub[3]), pathTy);
      // motive : Pi (x y : A) -> Id A x y -> U_i
      checkFamily(env, ctx, t->sub[0],
                  {a, shift(a, 1), idType(shift(a, 2), var(1), var(0))});
      // base : Pi (x : A) -> motive x x (refl A x)
      TermPtr baseTy =
          pi(a, app(app(app(shift(t->sub[0], 1), var(0)), var(0)),
                    refl(shift(a, 1), var(0))));
      check(env, ctx, t->sub[1], baseTy);
      return app(app(app(t->sub[0], t->sub[2]), t->sub[3]), t->sub[4]);
    }

    case Tag::Const: {
      const Declaration* d = env.find(t->name);
      if (!d)
        fail(ErrorKind::UnboundName, t->span, "unbound name '" + t->name + "'");
      return d->type;
    }

    case Tag::UnitTy:
    case Tag::BoolTy:
    case Tag::EmptyTy:
      return universe(0);
    case Tag::UnitVal:
      return mk(Tag::UnitTy);
    case Tag::BoolTrue:
    case Tag::BoolFalse:
      return mk(Tag::BoolTy);

    case Tag::UnitElim: {
      checkMotive(env, ctx, t->sub[0], mk(Tag::UnitTy));
      check(env, ctx, t->sub[1], app(t->sub[0], mk(Tag::UnitVal)));
      check(env, ctx, t->sub[2], mk(Tag::UnitTy));
      return app(t->sub[0], t->sub[2]);
    }
    case Tag::BoolElim: {
      checkMotive(env, ctx, t->sub[0], mk(Tag::BoolTy));
      check(env, ctx, t->sub[1], app(t->sub[0], mk(Tag::BoolTrue)));
      check(env, ctx, t->sub[2], app(t->sub[0], mk(Tag::BoolFalse)));
      check(env, ctx, t->sub[3], mk(Tag::BoolTy));
      return app(t->sub[0], t->sub[3]);
    }
    case Tag::EmptyElim: {
      checkMotive(env, ctx, t->sub[0], mk(Tag::EmptyTy));
      check(env, ctx, t->sub[1], mk(Tag::EmptyTy));
      return app(t->sub[0], t->sub[1]);
    }

    case Tag::SigElim: {
      TermPtr sty = whnf(env, infer(env, ctx, t->sub[2]));
      if (sty->tag != Tag::Sigma)
        fail(ErrorKind::NotAPair, t->sub[2]->span,
             "pair eliminator scrutinee has type " + printTerm(sty) +
                 ", which is not a pair type");
      checkMotive(env, ctx, t->sub[0], sty);
      // branch : Pi (a : A) (b : B a) -> motive (pair a b)
      TermPtr branchTy =
          pi(sty->sub[0],
             pi(sty->sub[1],
                app(shift(t->sub[0], 2), pairTerm(var(1), var(0)))));
      check(env, ctx, t->sub[1], branchTy);
      return app(t->sub[0], t->sub[2]);
    }
  }
  fail(ErrorKind::CannotInfer, t->span, "unhandled term form");
}

void check(const GlobalEnv& env, Context& ctx, const TermPtr& t,
           const TermPtr& expected) {
  TermPtr w = whnf(env, expected);
  if (t->tag == Tag::Lam && w->tag == Tag::Pi) {
    ctx.push(w->sub[0]);
    check(env, ctx, t->sub[0], w->sub[1]);
    ctx.pop();
    return;
  }
  if (t->tag == Tag::Pair && w->tag == Tag::Sigma) {
    check(env, ctx, t->sub[0], w->sub[0]);
    check(env, ctx, t->sub[1], instantiate(w->sub[1], t->sub[0]));
    return;
  }
  if (t->tag == Tag::Lam && w->tag != Tag::Pi)
    fail(ErrorKind::Mismatch, t->span,
         "function literal where a term of type " + printTerm(w) +
             " is expected",
         w, nullptr);
  if (t->tag == Tag::Pair && w->tag != Tag::Sigma)
    fail(ErrorKind::Mismatch, t->span,
         "pair literal where a term of type " + printTerm(w) + " is expected",
         w, nullptr);
  TermPtr got = infer(env, ctx, t);
  if (!cumul(env, got, w)) {
    TermPtr gw = whnf(env, got);
    fail(ErrorKind::Mismatch, t->span,
         "type mismatch: expected " + printTerm(w) + ", got " + printTerm(gw),
         w, gw);
  }
}

bool cumul(const GlobalEnv& env, const TermPtr& sub, const TermPtr& super) {
  if (conv(env, sub, super)) return true;
  TermPtr a = whnf(env, sub);
  TermPtr b = whnf(env, super);
  return a->tag == Tag::Universe && b->tag == Tag::Universe && a->nat <= b->nat;
}

void checkDeclaration(GlobalEnv& env, Declaration decl) {
  if (env.contains(decl.name))
    fail(ErrorKind::DuplicateName, decl.span,
         "duplicate declaration of '" + decl.name + "'");
  Context ctx;
  inferUniverse(env, ctx, decl.type);
  if (decl.kind == DeclKind::Definition) {
    check(env, ctx, decl.body, decl.type);
  } else if (decl.kind == DeclKind::Postulate && decl.marker.empty()) {
    fail(ErrorKind::SchemaError, decl.span,
         "postulate '" + decl.name + "' requires a nonempty marker string");
  }
  env.add(std::move(decl));
}

}  // namespace hott
