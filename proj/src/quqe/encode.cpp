#include "encode.hpp"

#include <algorithm>

#include "signature.hpp"

namespace quqe {

WffPtr encode(const WffPtr& w) {
  switch (w->kind) {
    case WKind::Var:
    case WKind::Const: return mk_quote(w);
    case WKind::App: return mk_app(c_app(), encode(w->a), encode(w->b));
    case WKind::Abs: return mk_app(c_abs(), encode(w->a), encode(w->b));
    case WKind::Cond:
      return mk_app(c_cond(), encode(w->a), encode(w->b), encode(w->c));
    case WKind::Quote: return mk_app(c_quot(), encode(w->a));
    case WKind::Eval:
      return mk_app(c_eval(), encode(w->a), mk_quote(mk_var("_ty", w->ty)));
  }
  return nullptr;
}

std::optional<WffPtr> decode(const WffPtr& w) {
  if (w->kind == WKind::Quote) {
    if (w->a->kind == WKind::Var || w->a->kind == WKind::Const) return w->a;
    return std::nullopt;
  }
  // constructor application spine
  std::vector<WffPtr> args;
  WffPtr h = w;
  while (h->kind == WKind::App) {
    args.push_back(h->b);
    h = h->a;
  }
  if (h->kind != WKind::Const || !is_constructor_const(h)) return std::nullopt;
  std::reverse(args.begin(), args.end());
  const std::string& n = h->name;
  if (n == "app" && args.size() == 2) {
    auto f = decode(args[0]);
    auto x = decode(args[1]);
    if (!f || !x) return std::nullopt;
    WffPtr r = mk_app(*f, *x);
    if (!type_of(r)) return std::nullopt;
    return r;
  }
  if (n == "abs" && args.size() == 2) {
    auto x = decode(args[0]);
    auto b = decode(args[1]);
    if (!x || !b || (*x)->kind != WKind::Var) return std::nullopt;
    return mk_abs(*x, *b);
  }
  if (n == "cond" && args.size() == 3) {
    auto t = decode(args[0]);
    auto u = decode(args[1]);
    auto v = decode(args[2]);
    if (!t || !u || !v) return std::nullopt;
    WffPtr r = mk_cond(*t, *u, *v);
    if (!type_of(r)) return std::nullopt;
    return r;
  }
  if (n == "quot" && args.size() == 1) {
    auto b = decode(args[0]);
    if (!b) return std::nullopt;
    return mk_quote(*b);
  }
  if (n == "eval" && args.size() == 2) {
    auto b = decode(args[0]);
    auto t = decode(args[1]);
    if (!b || !t) return std::nullopt;
    auto bt = type_of(*b);
    if (!bt || (*bt)->kind != TyKind::Epsilon) return std::nullopt;
    if ((*t)->kind != WKind::Var) return std::nullopt;
    return mk_eval(*b, (*t)->ty);
  }
  return std::nullopt;
}

bool is_literal(const WffPtr& w) { return decode(w).has_value(); }

std::optional<WffPtr> as_construction(const WffPtr& w) {
  if (w->kind == WKind::Quote) {
    if (!type_of(w->a)) return std::nullopt;
    return w->a;
  }
  return decode(w);
}

}  // namespace quqe
