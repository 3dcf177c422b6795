#include "signature.hpp"

namespace quqe {

static TypePtr ty_oee() { return ty_fn(ty_o(), {ty_eps()}); }

WffPtr c_Q(const TypePtr& alpha) {
  return mk_const("Q", ty_fn(ty_o(), {alpha, alpha}));
}
WffPtr c_iota(const TypePtr& alpha) {
  return mk_const("iota", ty_fun(alpha, ty_fun(ty_o(), alpha)));
}
WffPtr c_pair(const TypePtr& a, const TypePtr& b) {
  return mk_const("pair", ty_fn(ty_pair(a, b), {a, b}));
}
WffPtr c_var() { return mk_const("var", ty_oee()); }
WffPtr c_con() { return mk_const("con", ty_oee()); }
WffPtr c_app() { return mk_const("app", ty_fn(ty_eps(), {ty_eps(), ty_eps()})); }
WffPtr c_abs() { return mk_const("abs", ty_fn(ty_eps(), {ty_eps(), ty_eps()})); }
WffPtr c_cond() {
  return mk_const("cond", ty_fn(ty_eps(), {ty_eps(), ty_eps(), ty_eps()}));
}
WffPtr c_quot() { return mk_const("quot", ty_fn(ty_eps(), {ty_eps()})); }
WffPtr c_eval() { return mk_const("eval", ty_fn(ty_eps(), {ty_eps(), ty_eps()})); }
WffPtr c_evalfree() { return mk_const("eval-free", ty_oee()); }
WffPtr c_nfi() { return mk_const("not-free-in", ty_fn(ty_o(), {ty_eps(), ty_eps()})); }
WffPtr c_cleanse() { return mk_const("cleanse", ty_fn(ty_eps(), {ty_eps()})); }
WffPtr c_sub() { return mk_const("sub", ty_fn(ty_eps(), {ty_eps(), ty_eps(), ty_eps()})); }
WffPtr c_wff(const TypePtr& alpha) {
  return mk_const("wff^" + ty_mangle(alpha), ty_oee());
}

std::optional<TypePtr> wff_pred_param(const WffPtr& cst) {
  if (cst->kind != WKind::Const) return std::nullopt;
  if (cst->name.rfind("wff^", 0) != 0) return std::nullopt;
  if (!ty_eq(cst->ty, ty_oee())) return std::nullopt;
  return ty_demangle(cst->name.substr(4));
}

bool is_constructor_const(const WffPtr& cst) {
  if (cst->kind != WKind::Const) return false;
  const std::string& n = cst->name;
  if (n == "app") return ty_eq(cst->ty, c_app()->ty);
  if (n == "abs") return ty_eq(cst->ty, c_abs()->ty);
  if (n == "cond") return ty_eq(cst->ty, c_cond()->ty);
  if (n == "quot") return ty_eq(cst->ty, c_quot()->ty);
  if (n == "eval") return ty_eq(cst->ty, c_eval()->ty);
  return false;
}

bool is_logical_const(const std::string& name, const TypePtr& ty) {
  if (name == "Q") {
    // ((o a) a) for some a
    return ty->kind == TyKind::Fun && ty->a->kind == TyKind::Fun &&
           ty->a->a->kind == TyKind::Omicron && ty_eq(ty->a->b, ty->b);
  }
  if (name == "iota") {
    // (a (o a)), a != o
    return ty->kind == TyKind::Fun && ty->b->kind == TyKind::Fun &&
           ty->b->a->kind == TyKind::Omicron && ty_eq(ty->a, ty->b->b) &&
           ty->a->kind != TyKind::Omicron;
  }
  if (name == "pair") {
    // ((<a,b> b) a)
    if (ty->kind != TyKind::Fun || ty->a->kind != TyKind::Fun) return false;
    const TypePtr& pr = ty->a->a;
    return pr->kind == TyKind::Pair && ty_eq(pr->a, ty->b) && ty_eq(pr->b, ty->a->b);
  }
  if (name == "var" || name == "con" || name == "eval-free")
    return ty_eq(ty, ty_oee());
  if (name == "not-free-in") return ty_eq(ty, c_nfi()->ty);
  if (name == "app" || name == "abs" || name == "eval")
    return ty_eq(ty, c_app()->ty);
  if (name == "cond") return ty_eq(ty, c_cond()->ty);
  if (name == "quot" || name == "cleanse") return ty_eq(ty, c_quot()->ty);
  if (name == "sub") return ty_eq(ty, c_sub()->ty);
  if (name.rfind("wff^", 0) == 0)
    return ty_eq(ty, ty_oee()) && ty_demangle(name.substr(4)).has_value();
  return false;
}

bool Signature::declare(const std::string& name, const TypePtr& ty, std::string* err) {
  if (is_logical_const(name, ty) || name == "Q" || name == "iota" || name == "pair" ||
      name == "var" || name == "con" || name == "app" || name == "abs" ||
      name == "cond" || name == "quot" || name == "eval" || name == "eval-free" ||
      name == "not-free-in" || name == "cleanse" || name == "sub" ||
      name.rfind("wff^", 0) == 0) {
    if (err) *err = "constant name '" + name + "' is reserved for logical constants";
    return false;
  }
  auto it = nonlogical.find(name);
  if (it != nonlogical.end() && !ty_eq(it->second, ty)) {
    if (err) *err = "constant '" + name + "' already declared with a different type";
    return false;
  }
  if (defs.count(name)) {
    if (err) *err = "name '" + name + "' already used by a definition";
    return false;
  }
  nonlogical[name] = ty;
  return true;
}

bool Signature::define(const std::string& name, const TypePtr& ty, const WffPtr& body,
                       std::string* err) {
  if (nonlogical.count(name) || defs.count(name)) {
    if (err) *err = "name '" + name + "' already in use";
    return false;
  }
  auto bt = type_of(body);
  if (!bt || !ty_eq(*bt, ty)) {
    if (err) *err = "definition body for '" + name + "' does not have declared type";
    return false;
  }
  if (!free_vars_surface(body).empty()) {
    if (err) *err = "definition body for '" + name + "' is not closed";
    return false;
  }
  defs[name] = Def{name, ty, body};
  def_order.push_back(name);
  return true;
}

std::optional<WffPtr> Signature::resolve_const(const std::string& name,
                                               const TypePtr& ty) const {
  if (is_logical_const(name, ty)) return mk_const(name, ty);
  auto it = nonlogical.find(name);
  if (it != nonlogical.end() && ty_eq(it->second, ty)) return mk_const(name, ty);
  auto dt = defs.find(name);
  if (dt != defs.end() && ty_eq(dt->second.ty, ty)) return dt->second.body;
  return std::nullopt;
}

bool is_primitive_const(const Signature& sig, const WffPtr& w) {
  if (w->kind != WKind::Const) return false;
  if (is_logical_const(w->name, w->ty)) return true;
  auto it = sig.nonlogical.find(w->name);
  return it != sig.nonlogical.end() && ty_eq(it->second, w->ty);
}

std::optional<std::string> unknown_const(const Signature& sig, const WffPtr& w) {
  switch (w->kind) {
    case WKind::Var: return std::nullopt;
    case WKind::Const:
      if (!is_primitive_const(sig, w))
        return w->name + ":" + ty_str(w->ty);
      return std::nullopt;
    case WKind::App:
    case WKind::Abs:
      if (auto e = unknown_const(sig, w->a)) return e;
      return unknown_const(sig, w->b);
    case WKind::Cond:
      if (auto e = unknown_const(sig, w->a)) return e;
      if (auto e = unknown_const(sig, w->b)) return e;
      return unknown_const(sig, w->c);
    case WKind::Quote:
    case WKind::Eval: return unknown_const(sig, w->a);
  }
  return std::nullopt;
}

}  // namespace quqe
