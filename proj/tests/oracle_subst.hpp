#pragma once
// Independent reference implementation of capture-avoiding substitution
// WITHOUT renaming, straight from the textbook definition: B[x := A] is
// defined when no free occurrence of x in B lies under a binder that binds a
// variable free in A; no alpha-conversion is ever performed. Written directly
// against the AST, independently of the engine's clause-directed algorithm.
#include <optional>

#include "../src/quqe/ast.hpp"

namespace oracle {

using quqe::WffPtr;
using quqe::WKind;

inline bool free_in(const WffPtr& x, const WffPtr& w) {
  switch (w->kind) {
    case WKind::Var: return quqe::wff_eq(x, w);
    case WKind::Const: return false;
    case WKind::App: return free_in(x, w->a) || free_in(x, w->b);
    case WKind::Abs:
      if (quqe::wff_eq(w->a, x)) return false;
      return free_in(x, w->b);
    case WKind::Cond:
      return free_in(x, w->a) || free_in(x, w->b) || free_in(x, w->c);
    case WKind::Quote: return false;
    case WKind::Eval: return free_in(x, w->a);
  }
  return false;
}

// nullopt = undefined because of variable capture
inline std::optional<WffPtr> subst(const WffPtr& A, const WffPtr& x,
                                   const WffPtr& B) {
  switch (B->kind) {
    case WKind::Var: return quqe::wff_eq(B, x) ? A : B;
    case WKind::Const: return B;
    case WKind::App: {
      auto f = subst(A, x, B->a);
      auto g = subst(A, x, B->b);
      if (!f || !g) return std::nullopt;
      return quqe::mk_app(*f, *g);
    }
    case WKind::Abs: {
      if (quqe::wff_eq(B->a, x)) return B;
      if (!free_in(x, B->b)) return B;
      if (free_in(B->a, A)) return std::nullopt;  // capture, no renaming
      auto b = subst(A, x, B->b);
      if (!b) return std::nullopt;
      return quqe::mk_abs(B->a, *b);
    }
    case WKind::Cond: {
      auto t = subst(A, x, B->a);
      auto u = subst(A, x, B->b);
      auto v = subst(A, x, B->c);
      if (!t || !u || !v) return std::nullopt;
      return quqe::mk_cond(*t, *u, *v);
    }
    case WKind::Quote: return B;
    case WKind::Eval: {
      auto b = subst(A, x, B->a);
      if (!b) return std::nullopt;
      return quqe::mk_eval(*b, B->ty);
    }
  }
  return std::nullopt;
}

}  // namespace oracle
