#pragma once
// Random well-typed wff generator shared by tests and the acceptance suite.
#include <random>
#include <string>
#include <vector>

#include "../src/quqe/ast.hpp"
#include "../src/quqe/signature.hpp"

namespace gen {

using namespace quqe;

struct Gen {
  std::mt19937 rng;
  Signature* sig;
  bool allow_eval = true;
  bool allow_quote = true;

  explicit Gen(unsigned seed, Signature* s) : rng(seed), sig(s) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  TypePtr type(int depth) {
    int r = pick(depth > 0 ? 5 : 3);
    switch (r) {
      case 0: return ty_i();
      case 1: return ty_o();
      case 2: return ty_eps();
      case 3: return ty_fun(type(depth - 1), type(depth - 1));
      default: return ty_pair(type(depth - 1), type(depth - 1));
    }
  }

  WffPtr leaf(const TypePtr& t) {
    static const char* vnames[] = {"x", "y", "z", "u", "v", "w"};
    if (pick(2) == 0) return mk_var(vnames[pick(6)], t);
    std::string cn = "k_" + ty_mangle(t);
    sig->declare(cn, t, nullptr);
    return mk_const(cn, t);
  }

  WffPtr wff(const TypePtr& t, int depth) {
    if (depth <= 0) return leaf(t);
    int r = pick(10);
    switch (r) {
      case 0:
      case 1: return leaf(t);
      case 2:
      case 3: {  // application
        TypePtr a = type(1);
        return mk_app(wff(ty_fun(t, a), depth - 1), wff(a, depth - 1));
      }
      case 4:
      case 5:
        if (t->kind == TyKind::Fun) {
          static const char* bn[] = {"x", "y", "z", "b"};
          return mk_abs(mk_var(bn[pick(4)], t->b), wff(t->a, depth - 1));
        }
        return wff(t, depth - 1);
      case 6:
        return mk_cond(wff(ty_o(), depth - 1), wff(t, depth - 1), wff(t, depth - 1));
      case 7:
        if (t->kind == TyKind::Epsilon && allow_quote) {
          bool saved = allow_eval;
          allow_eval = true;  // quotations may contain evaluations
          WffPtr q = mk_quote(wff(type(1), depth - 1));
          allow_eval = saved;
          return q;
        }
        return wff(t, depth - 1);
      case 8:
        if (allow_eval) return mk_eval(wff(ty_eps(), depth - 1), t);
        return wff(t, depth - 1);
      default: return leaf(t);
    }
  }
};

}  // namespace gen
