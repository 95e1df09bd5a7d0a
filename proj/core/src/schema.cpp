#include "hott/schema.hpp"

#include "hott/parser.hpp"

namespace hott {
namespace {

std::string concatName(uint32_t k) {
  return k == 0 ? "concat" : "concat-" + std::to_string(k);
}
std::string apName(uint32_t i, uint32_t k) {
  if (i == 0 && k == 0) return "ap";
  return "ap-" + std::to_string(i) + std::to_string(k);
}
std::string transportName(uint32_t k) {
  return k == 0 ? "transport" : "transport-0" + std::to_string(k);
}
std::string apdName(uint32_t k) {
  return k == 0 ? "apd" : "apd-0" + std::to_string(k);
}

void requirePrelude(const GlobalEnv& env, const std::string& name,
                    const Span& span) {
  if (!env.find(name))
    throw TypeError(ErrorKind::SchemaError, span,
                    "schema elaboration requires '" + name +
                        "' to be in scope; import the paths prelude first");
}

// Parses a generated type, checks it, and installs the constant.
void emit(GlobalEnv& env, std::vector<std::string>& names,
          const std::string& name, const std::string& type,
          const std::string& schema, const Span& span) {
  TermPtr ty;
  try {
    ty = parseTerm(type, "<generated:" + name + ">");
  } catch (const ParseError& e) {
    throw TypeError(ErrorKind::SchemaError, span,
                    "internal schema template error for '" + name +
                        "': " + e.what());
  }
  Declaration d;
  d.name = name;
  d.kind = DeclKind::Generated;
  d.type = ty;
  d.marker = schema;
  d.span = span;
  checkDeclaration(env, std::move(d));
  names.push_back(name);
}

// Installs a schema parameter as a named definition so generated types can
// refer to it by constant (a raw lambda cannot head an application when the
// generated type is re-checked).
void emitDef(GlobalEnv& env, const std::string& name, TermPtr type,
             TermPtr body, const std::string& schema, const Span& span) {
  Declaration d;
  d.name = name;
  d.kind = DeclKind::Definition;
  d.type = std::move(type);
  d.body = std::move(body);
  d.marker = schema;
  d.span = span;
  checkDeclaration(env, std::move(d));
}

void checkParam(GlobalEnv& env, const TermPtr& t, const TermPtr& ty,
                const char* what) {
  Context ctx;
  try {
    check(env, ctx, t, ty);
  } catch (TypeError& e) {
    throw TypeError(ErrorKind::SchemaError, e.span,
                    std::string("schema parameter ") + what + ": " + e.what());
  }
}

std::string levelSuffix(size_t idx, uint32_t k) {
  return idx == 0 ? "" : "-" + std::to_string(k);
}

}  // namespace

// Template binders are underscore-prefixed so they cannot capture constants
// mentioned by the (printed) schema parameters.
std::vector<std::string> elaborateWSusp(GlobalEnv& env,
                                        const WSuspSignature& sig) {
  const std::string schema = "wsusp " + sig.name;
  checkParam(env, sig.B, universe(0), "B");
  checkParam(env, sig.C, universe(0), "C");
  checkParam(env, sig.A, pi(sig.B, universe(0)), "A");
  checkParam(env, sig.f, pi(sig.B, shift(sig.C, 1)), "f");
  checkParam(env, sig.g, pi(sig.B, shift(sig.C, 1)), "g");
  for (uint32_t k : sig.levels) {
    requirePrelude(env, concatName(k), sig.span);
    requirePrelude(env, apName(0, k), sig.span);
    requirePrelude(env, apName(k, k), sig.span);
    requirePrelude(env, transportName(k), sig.span);
    requirePrelude(env, apdName(k), sig.span);
  }

  const std::string N = sig.name;
  const std::string B = N + ".B", C = N + ".C", A = N + ".A", f = N + ".f",
                    g = N + ".g";
  emitDef(env, B, universe(0), sig.B, schema, sig.span);
  emitDef(env, C, universe(0), sig.C, schema, sig.span);
  emitDef(env, A, pi(constant(B), universe(0)), sig.A, schema, sig.span);
  emitDef(env, f, pi(constant(B), constant(C)), sig.f, schema, sig.span);
  emitDef(env, g, pi(constant(B), constant(C)), sig.g, schema, sig.span);
  const std::string PT = N + ".pt", CL = N + ".cl";

  std::vector<std::string> out;
  emit(env, out, N, "U0", schema, sig.span);
  emit(env, out, PT, C + " -> " + N, schema, sig.span);
  emit(env, out, CL,
       "Pi (_b : " + B + ") -> " + A + " _b -> Id " + N + " (" + PT + " (" +
           f + " _b)) (" + PT + " (" + g + " _b))",
       schema, sig.span);

  for (size_t idx = 0; idx < sig.levels.size(); ++idx) {
    uint32_t k = sig.levels[idx];
    const std::string S = levelSuffix(idx, k);
    const std::string U = "U" + std::to_string(k);
    const std::string REC = N + ".rec" + S, IND = N + ".ind" + S;
    const std::string BRP = N + ".rec-beta-pt" + S,
                      BRC = N + ".rec-beta-cl" + S,
                      BIP = N + ".ind-beta-pt" + S,
                      BIC = N + ".ind-beta-cl" + S;
    const std::string CCT = concatName(k), TRN = transportName(k),
                      AP0K = apName(0, k), APKK = apName(k, k),
                      APD = apdName(k);
    const std::string ptf = "(" + PT + " (" + f + " _b))",
                      ptg = "(" + PT + " (" + g + " _b))",
                      cl = "(" + CL + " _b _a)";

    const std::string recPrem = "(_X : " + U + ") (_p : " + C +
                                " -> _X) (_s : Pi (_b : " + B + ") -> " + A +
                                " _b -> Id _X (_p (" + f + " _b)) (_p (" + g +
                                " _b)))";
    emit(env, out, REC, "Pi " + recPrem + " -> " + N + " -> _X", schema,
         sig.span);

    const std::string indPrem =
        "(_E : " + N + " -> " + U + ") (_e : Pi (_c : " + C + ") -> _E (" +
        PT + " _c)) (_d : Pi (_b : " + B + ") (_a : " + A +
        " _b) -> Id (_E " + ptg + ") (" + TRN + " " + N + " _E " + ptf + " " +
        ptg + " " + cl + " (_e (" + f + " _b))) (_e (" + g + " _b)))";
    emit(env, out, IND, "Pi " + indPrem + " (_x : " + N + ") -> _E _x",
         schema, sig.span);

    const std::string rec = "(" + REC + " _X _p _s)";
    emit(env, out, BRP,
         "Pi " + recPrem + " (_c : " + C + ") -> Id _X (" + rec + " (" + PT +
             " _c)) (_p _c)",
         schema, sig.span);

    // ap rec (cl b a) . beta(g b)  =  beta(f b) . s b a
    const std::string recf = "(" + rec + " " + ptf + ")",
                      recg = "(" + rec + " " + ptg + ")",
                      pf = "(_p (" + f + " _b))", pg = "(_p (" + g + " _b))";
    emit(env, out, BRC,
         "Pi " + recPrem + " (_b : " + B + ") (_a : " + A +
             " _b) -> Id (Id _X " + recf + " " + pg + ") (" + CCT + " _X " +
             recf + " " + recg + " " + pg + " (" + AP0K + " " + N + " _X " +
             rec + " " + ptf + " " + ptg + " " + cl + ") (" + BRP +
             " _X _p _s (" + g + " _b))) (" + CCT + " _X " + recf + " " + pf +
             " " + pg + " (" + BRP + " _X _p _s (" + f + " _b)) (_s _b _a))",
         schema, sig.span);

    const std::string ind = "(" + IND + " _E _e _d)";
    emit(env, out, BIP,
         "Pi " + indPrem + " (_c : " + C + ") -> Id (_E (" + PT + " _c)) (" +
             ind + " (" + PT + " _c)) (_e _c)",
         schema, sig.span);

    // apd ind (cl b a) . beta(g b)  =  ap (transport E (cl b a)) (beta(f b)) . d b a
    const std::string trn =
        "(" + TRN + " " + N + " _E " + ptf + " " + ptg + " " + cl + ")";
    const std::string indf = "(" + ind + " " + ptf + ")",
                      indg = "(" + ind + " " + ptg + ")",
                      ef = "(_e (" + f + " _b))", eg = "(_e (" + g + " _b))";
    const std::string tindf = "(" + trn + " " + indf + ")",
                      tef = "(" + trn + " " + ef + ")";
    const std::string fam = "(_E " + ptg + ")";
    emit(env, out, BIC,
         "Pi " + indPrem + " (_b : " + B + ") (_a : " + A +
             " _b) -> Id (Id " + fam + " " + tindf + " " + eg + ") (" + CCT +
             " " + fam + " " + tindf + " " + indg + " " + eg + " (" + APD +
             " " + N + " _E " + ind + " " + ptf + " " + ptg + " " + cl +
             ") (" + BIP + " _E _e _d (" + g + " _b))) (" + CCT + " " + fam +
             " " + tindf + " " + tef + " " + eg + " (" + APKK + " (_E " + ptf +
             ") " + fam + " " + trn + " " + indf + " " + ef + " (" + BIP +
             " _E _e _d (" + f + " _b))) (_d _b _a))",
         schema, sig.span);
  }
  return out;
}

std::vector<std::string> elaborateTrunc(GlobalEnv& env,
                                        const TruncSignature& sig) {
  const std::string schema = "trunc " + sig.name;
  checkParam(env, sig.A, universe(0), "A");
  for (uint32_t k : sig.levels) requirePrelude(env, transportName(k), sig.span);

  const std::string N = sig.name;
  const std::string A = N + ".A";
  emitDef(env, A, universe(0), sig.A, schema, sig.span);
  const std::string INJ = N + ".inj", SQ = N + ".sq";

  std::vector<std::string> out;
  emit(env, out, N, "U0", schema, sig.span);
  emit(env, out, INJ, A + " -> " + N, schema, sig.span);
  emit(env, out, SQ, "Pi (_x _y : " + N + ") -> Id " + N + " _x _y", schema,
       sig.span);

  for (size_t idx = 0; idx < sig.levels.size(); ++idx) {
    uint32_t k = sig.levels[idx];
    const std::string S = levelSuffix(idx, k);
    const std::string U = "U" + std::to_string(k);
    const std::string REC = N + ".rec" + S, IND = N + ".ind" + S;
    const std::string TRN = transportName(k);

    const std::string recPrem = "(_C : " + U + ") (_c : " + A +
                                " -> _C) (_s : Pi (_x _y : _C) -> Id _C _x _y)";
    emit(env, out, REC, "Pi " + recPrem + " -> " + N + " -> _C", schema,
         sig.span);

    const std::string indPrem =
        "(_E : " + N + " -> " + U + ") (_e : Pi (_a : " + A + ") -> _E (" +
        INJ + " _a)) (_d : Pi (_x _y : " + N +
        ") (_u : _E _x) (_v : _E _y) -> Id (_E _y) (" + TRN + " " + N +
        " _E _x _y (" + SQ + " _x _y) _u) _v)";
    emit(env, out, IND, "Pi " + indPrem + " (_x : " + N + ") -> _E _x",
         schema, sig.span);

    emit(env, out, N + ".rec-beta" + S,
         "Pi " + recPrem + " (_a : " + A + ") -> Id _C (" + REC +
             " _C _c _s (" + INJ + " _a)) (_c _a)",
         schema, sig.span);
    emit(env, out, N + ".ind-beta" + S,
         "Pi " + indPrem + " (_a : " + A + ") -> Id (_E (" + INJ + " _a)) (" +
             IND + " _E _e _d (" + INJ + " _a)) (_e _a)",
         schema, sig.span);
  }
  return out;
}

}  // namespace hott
