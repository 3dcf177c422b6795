#include "sugar.hpp"

#include "signature.hpp"

namespace quqe {

WffPtr res_var(int i, const TypePtr& ty) {
  return mk_var("%" + std::to_string(i), ty);
}

WffPtr mk_eq(const WffPtr& a, const WffPtr& b) {
  auto ta = type_of(a);
  return mk_app(c_Q(ta ? *ta : ty_o()), a, b);
}

WffPtr mk_true() {
  static WffPtr t = mk_eq(c_Q(ty_o()), c_Q(ty_o()));
  return t;
}

WffPtr mk_false() {
  static WffPtr f = [] {
    WffPtr x = res_var(0, ty_o());
    return mk_eq(mk_abs(x, mk_true()), mk_abs(x, x));
  }();
  return f;
}

WffPtr and_w() {
  static WffPtr w = [] {
    WffPtr x = res_var(0, ty_o());
    WffPtr y = res_var(1, ty_o());
    WffPtr g = res_var(2, ty_fn(ty_o(), {ty_o(), ty_o()}));
    WffPtr lhs = mk_abs(g, mk_app(g, mk_true(), mk_true()));
    WffPtr rhs = mk_abs(g, mk_app(g, x, y));
    return mk_abs(x, mk_abs(y, mk_eq(lhs, rhs)));
  }();
  return w;
}

WffPtr mk_and(const WffPtr& a, const WffPtr& b) { return mk_app(and_w(), a, b); }

WffPtr implies_w() {
  static WffPtr w = [] {
    WffPtr x = res_var(0, ty_o());
    WffPtr y = res_var(1, ty_o());
    return mk_abs(x, mk_abs(y, mk_eq(x, mk_and(x, y))));
  }();
  return w;
}

WffPtr mk_implies(const WffPtr& a, const WffPtr& b) {
  return mk_app(implies_w(), a, b);
}

WffPtr not_w() {
  static WffPtr w = mk_app(c_Q(ty_o()), mk_false());
  return w;
}

WffPtr mk_not(const WffPtr& a) { return mk_app(not_w(), a); }

WffPtr or_w() {
  static WffPtr w = [] {
    WffPtr x = res_var(0, ty_o());
    WffPtr y = res_var(1, ty_o());
    return mk_abs(x, mk_abs(y, mk_not(mk_and(mk_not(x), mk_not(y)))));
  }();
  return w;
}

WffPtr mk_or(const WffPtr& a, const WffPtr& b) { return mk_app(or_w(), a, b); }

WffPtr mk_forall(const WffPtr& x, const WffPtr& body) {
  return mk_eq(mk_abs(res_var(0, x->ty), mk_true()), mk_abs(x, body));
}

WffPtr mk_exists(const WffPtr& x, const WffPtr& body) {
  return mk_not(mk_forall(x, mk_not(body)));
}

WffPtr mk_exists1(const WffPtr& x, const WffPtr& body) {
  return mk_exists(x, mk_eq(mk_abs(x, body), mk_app(c_Q(x->ty), x)));
}

WffPtr mk_neq(const WffPtr& a, const WffPtr& b) { return mk_not(mk_eq(a, b)); }

WffPtr mk_defined(const WffPtr& a) { return mk_eq(a, a); }

WffPtr mk_undefined(const WffPtr& a) { return mk_not(mk_defined(a)); }

WffPtr mk_quasi(const WffPtr& a, const WffPtr& b) {
  return mk_implies(mk_or(mk_defined(a), mk_defined(b)), mk_eq(a, b));
}

WffPtr mk_desc(const WffPtr& x, const WffPtr& body) {
  return mk_app(c_iota(x->ty), mk_abs(x, body));
}

WffPtr mk_bottom(const TypePtr& ty) {
  if (ty->kind == TyKind::Omicron) return mk_false();
  WffPtr x = res_var(0, ty);
  return mk_desc(x, mk_neq(x, x));
}

WffPtr mk_fst(const TypePtr& a, const TypePtr& b) {
  WffPtr z = res_var(0, ty_pair(a, b));
  WffPtr x = res_var(1, a);
  WffPtr y = res_var(2, b);
  return mk_abs(z, mk_desc(x, mk_exists(y, mk_eq(z, mk_app(c_pair(a, b), x, y)))));
}

WffPtr mk_snd(const TypePtr& a, const TypePtr& b) {
  WffPtr z = res_var(0, ty_pair(a, b));
  WffPtr y = res_var(1, b);
  WffPtr x = res_var(2, a);
  return mk_abs(z, mk_desc(y, mk_exists(x, mk_eq(z, mk_app(c_pair(a, b), x, y)))));
}

WffPtr mk_varpred(const TypePtr& alpha) {
  WffPtr x = res_var(0, ty_eps());
  return mk_abs(x, mk_and(mk_app(c_var(), x), mk_app(c_wff(alpha), x)));
}

WffPtr mk_conpred(const TypePtr& alpha) {
  WffPtr x = res_var(0, ty_eps());
  return mk_abs(x, mk_and(mk_app(c_con(), x), mk_app(c_wff(alpha), x)));
}

WffPtr mk_evalfreepred(const TypePtr& alpha) {
  WffPtr x = res_var(0, ty_eps());
  return mk_abs(x, mk_and(mk_app(c_evalfree(), x), mk_app(c_wff(alpha), x)));
}

WffPtr mk_synclosed() {
  static WffPtr w = [] {
    WffPtr x = res_var(0, ty_eps());
    WffPtr y = res_var(1, ty_eps());
    return mk_abs(x, mk_forall(y, mk_implies(mk_app(c_var(), y),
                                             mk_app(c_nfi(), y, x))));
  }();
  return w;
}

// ---------- recognizers ----------

bool is_true(const WffPtr& w) { return wff_eq(w, mk_true()); }
bool is_false(const WffPtr& w) { return wff_eq(w, mk_false()); }

std::optional<Bin> match_eq(const WffPtr& w) {
  if (w->kind != WKind::App || w->a->kind != WKind::App) return std::nullopt;
  const WffPtr& h = w->a->a;
  if (h->kind != WKind::Const || h->name != "Q") return std::nullopt;
  if (!is_logical_const("Q", h->ty)) return std::nullopt;
  auto ta = type_of(w->a->b);
  auto tb = type_of(w->b);
  if (!ta || !tb || !ty_eq(*ta, *tb) || !ty_eq(*ta, h->ty->b)) return std::nullopt;
  return Bin{w->a->b, w->b};
}

static std::optional<Bin> match_head2(const WffPtr& w, const WffPtr& head) {
  if (w->kind != WKind::App || w->a->kind != WKind::App) return std::nullopt;
  if (!wff_eq(w->a->a, head)) return std::nullopt;
  return Bin{w->a->b, w->b};
}

std::optional<Bin> match_and(const WffPtr& w) { return match_head2(w, and_w()); }
std::optional<Bin> match_or(const WffPtr& w) { return match_head2(w, or_w()); }
std::optional<Bin> match_implies(const WffPtr& w) {
  return match_head2(w, implies_w());
}

std::optional<WffPtr> match_not(const WffPtr& w) {
  if (w->kind != WKind::App) return std::nullopt;
  if (!wff_eq(w->a, not_w())) return std::nullopt;
  return w->b;
}

std::optional<Bin> match_forall(const WffPtr& w) {
  auto eq = match_eq(w);
  if (!eq) return std::nullopt;
  if (eq->a->kind != WKind::Abs || eq->b->kind != WKind::Abs) return std::nullopt;
  const WffPtr& x = eq->b->a;
  if (!wff_eq(eq->a, mk_abs(res_var(0, x->ty), mk_true()))) return std::nullopt;
  return Bin{x, eq->b->b};
}

std::optional<Bin> match_exists(const WffPtr& w) {
  auto n = match_not(w);
  if (!n) return std::nullopt;
  auto fa = match_forall(*n);
  if (!fa) return std::nullopt;
  auto nb = match_not(fa->b);
  if (!nb) return std::nullopt;
  return Bin{fa->a, *nb};
}

std::optional<Bin> match_exists1(const WffPtr& w) {
  auto ex = match_exists(w);
  if (!ex) return std::nullopt;
  auto eq = match_eq(ex->b);
  if (!eq) return std::nullopt;
  if (eq->a->kind != WKind::Abs || !wff_eq(eq->a->a, ex->a)) return std::nullopt;
  if (!wff_eq(eq->b, mk_app(c_Q(ex->a->ty), ex->a))) return std::nullopt;
  return Bin{ex->a, eq->a->b};
}

std::optional<WffPtr> match_defined(const WffPtr& w) {
  auto eq = match_eq(w);
  if (!eq || !wff_eq(eq->a, eq->b)) return std::nullopt;
  return eq->a;
}

std::optional<WffPtr> match_undefined(const WffPtr& w) {
  auto n = match_not(w);
  if (!n) return std::nullopt;
  return match_defined(*n);
}

std::optional<Bin> match_quasi(const WffPtr& w) {
  auto imp = match_implies(w);
  if (!imp) return std::nullopt;
  auto dis = match_or(imp->a);
  if (!dis) return std::nullopt;
  auto da = match_defined(dis->a);
  auto db = match_defined(dis->b);
  if (!da || !db) return std::nullopt;
  auto eq = match_eq(imp->b);
  if (!eq) return std::nullopt;
  if (!wff_eq(*da, eq->a) || !wff_eq(*db, eq->b)) return std::nullopt;
  return Bin{eq->a, eq->b};
}

std::optional<Bin> match_desc(const WffPtr& w) {
  if (w->kind != WKind::App || w->b->kind != WKind::Abs) return std::nullopt;
  const WffPtr& h = w->a;
  if (h->kind != WKind::Const || h->name != "iota") return std::nullopt;
  if (!is_logical_const("iota", h->ty)) return std::nullopt;
  if (!ty_eq(h->ty->a, w->b->a->ty)) return std::nullopt;
  return Bin{w->b->a, w->b->b};
}

bool is_bottom(const WffPtr& w) {
  if (is_false(w)) return true;
  auto d = match_desc(w);
  if (!d) return false;
  return wff_eq(w, mk_bottom(d->a->ty));
}

std::optional<std::pair<TypePtr, TypePtr>> match_fst(const WffPtr& w) {
  if (w->kind != WKind::Abs || w->a->ty->kind != TyKind::Pair) return std::nullopt;
  TypePtr a = w->a->ty->a, b = w->a->ty->b;
  if (!wff_eq(w, mk_fst(a, b))) return std::nullopt;
  return std::make_pair(a, b);
}

std::optional<std::pair<TypePtr, TypePtr>> match_snd(const WffPtr& w) {
  if (w->kind != WKind::Abs || w->a->ty->kind != TyKind::Pair) return std::nullopt;
  TypePtr a = w->a->ty->a, b = w->a->ty->b;
  if (!wff_eq(w, mk_snd(a, b))) return std::nullopt;
  return std::make_pair(a, b);
}

bool is_synclosed_head(const WffPtr& w) { return wff_eq(w, mk_synclosed()); }

}  // namespace quqe
