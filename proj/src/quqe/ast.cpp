#include "ast.hpp"

#include <functional>
#include <sstream>

namespace quqe {

TypePtr ty_i() {
  static TypePtr t = std::make_shared<Type>(Type{TyKind::Iota, nullptr, nullptr});
  return t;
}
TypePtr ty_o() {
  static TypePtr t = std::make_shared<Type>(Type{TyKind::Omicron, nullptr, nullptr});
  return t;
}
TypePtr ty_eps() {
  static TypePtr t = std::make_shared<Type>(Type{TyKind::Epsilon, nullptr, nullptr});
  return t;
}
TypePtr ty_fun(TypePtr result, TypePtr arg) {
  return std::make_shared<Type>(Type{TyKind::Fun, std::move(result), std::move(arg)});
}
TypePtr ty_pair(TypePtr first, TypePtr second) {
  return std::make_shared<Type>(Type{TyKind::Pair, std::move(first), std::move(second)});
}
TypePtr ty_fn(TypePtr result, std::vector<TypePtr> args) {
  TypePtr t = std::move(result);
  for (auto it = args.rbegin(); it != args.rend(); ++it) t = ty_fun(t, *it);
  return t;
}

bool ty_eq(const TypePtr& s, const TypePtr& t) {
  if (s.get() == t.get()) return true;
  if (!s || !t) return false;
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case TyKind::Iota:
    case TyKind::Omicron:
    case TyKind::Epsilon: return true;
    case TyKind::Fun:
    case TyKind::Pair: return ty_eq(s->a, t->a) && ty_eq(s->b, t->b);
  }
  return false;
}

std::string ty_str(const TypePtr& t) {
  switch (t->kind) {
    case TyKind::Iota: return "i";
    case TyKind::Omicron: return "o";
    case TyKind::Epsilon: return "eps";
    case TyKind::Fun: return "(" + ty_str(t->a) + " " + ty_str(t->b) + ")";
    case TyKind::Pair: return "<" + ty_str(t->a) + "," + ty_str(t->b) + ">";
  }
  return "?";
}

std::string ty_mangle(const TypePtr& t) {
  switch (t->kind) {
    case TyKind::Iota: return "i";
    case TyKind::Omicron: return "o";
    case TyKind::Epsilon: return "E";
    case TyKind::Fun: return "f" + ty_mangle(t->a) + ty_mangle(t->b);
    case TyKind::Pair: return "p" + ty_mangle(t->a) + ty_mangle(t->b);
  }
  return "?";
}

static std::optional<TypePtr> demangle_at(const std::string& s, std::size_t& i) {
  if (i >= s.size()) return std::nullopt;
  char c = s[i++];
  switch (c) {
    case 'i': return ty_i();
    case 'o': return ty_o();
    case 'E': return ty_eps();
    case 'f':
    case 'p': {
      auto a = demangle_at(s, i);
      if (!a) return std::nullopt;
      auto b = demangle_at(s, i);
      if (!b) return std::nullopt;
      return c == 'f' ? ty_fun(*a, *b) : ty_pair(*a, *b);
    }
    default: return std::nullopt;
  }
}

std::optional<TypePtr> ty_demangle(const std::string& s) {
  std::size_t i = 0;
  auto t = demangle_at(s, i);
  if (!t || i != s.size()) return std::nullopt;
  return t;
}

WffPtr mk_var(std::string name, TypePtr ty) {
  return std::make_shared<Wff>(Wff{WKind::Var, std::move(name), std::move(ty), nullptr, nullptr, nullptr});
}
WffPtr mk_const(std::string name, TypePtr ty) {
  return std::make_shared<Wff>(Wff{WKind::Const, std::move(name), std::move(ty), nullptr, nullptr, nullptr});
}
WffPtr mk_app(WffPtr fn, WffPtr arg) {
  return std::make_shared<Wff>(Wff{WKind::App, "", nullptr, std::move(fn), std::move(arg), nullptr});
}
WffPtr mk_app(WffPtr fn, WffPtr a1, WffPtr a2) {
  return mk_app(mk_app(std::move(fn), std::move(a1)), std::move(a2));
}
WffPtr mk_app(WffPtr fn, WffPtr a1, WffPtr a2, WffPtr a3) {
  return mk_app(mk_app(mk_app(std::move(fn), std::move(a1)), std::move(a2)), std::move(a3));
}
WffPtr mk_abs(WffPtr binder, WffPtr body) {
  return std::make_shared<Wff>(Wff{WKind::Abs, "", nullptr, std::move(binder), std::move(body), nullptr});
}
WffPtr mk_cond(WffPtr test, WffPtr thenb, WffPtr elseb) {
  return std::make_shared<Wff>(Wff{WKind::Cond, "", nullptr, std::move(test), std::move(thenb), std::move(elseb)});
}
WffPtr mk_quote(WffPtr body) {
  return std::make_shared<Wff>(Wff{WKind::Quote, "", nullptr, std::move(body), nullptr, nullptr});
}
WffPtr mk_eval(WffPtr body, TypePtr ty) {
  return std::make_shared<Wff>(Wff{WKind::Eval, "", std::move(ty), std::move(body), nullptr, nullptr});
}

bool wff_eq(const WffPtr& u, const WffPtr& v) {
  if (u.get() == v.get()) return true;
  if (!u || !v) return false;
  if (u->kind != v->kind) return false;
  switch (u->kind) {
    case WKind::Var:
    case WKind::Const: return u->name == v->name && ty_eq(u->ty, v->ty);
    case WKind::App: return wff_eq(u->a, v->a) && wff_eq(u->b, v->b);
    case WKind::Abs: return wff_eq(u->a, v->a) && wff_eq(u->b, v->b);
    case WKind::Cond:
      return wff_eq(u->a, v->a) && wff_eq(u->b, v->b) && wff_eq(u->c, v->c);
    case WKind::Quote: return wff_eq(u->a, v->a);
    case WKind::Eval: return ty_eq(u->ty, v->ty) && wff_eq(u->a, v->a);
  }
  return false;
}

std::optional<TypePtr> type_of(const WffPtr& w) {
  switch (w->kind) {
    case WKind::Var:
    case WKind::Const: return w->ty;
    case WKind::App: {
      auto f = type_of(w->a);
      auto x = type_of(w->b);
      if (!f || !x) return std::nullopt;
      if ((*f)->kind != TyKind::Fun || !ty_eq((*f)->b, *x)) return std::nullopt;
      return (*f)->a;
    }
    case WKind::Abs: {
      if (w->a->kind != WKind::Var) return std::nullopt;
      auto b = type_of(w->b);
      if (!b) return std::nullopt;
      return ty_fun(*b, w->a->ty);
    }
    case WKind::Cond: {
      auto t = type_of(w->a);
      auto u = type_of(w->b);
      auto v = type_of(w->c);
      if (!t || !u || !v) return std::nullopt;
      if ((*t)->kind != TyKind::Omicron || !ty_eq(*u, *v)) return std::nullopt;
      return *u;
    }
    case WKind::Quote: {
      if (!type_of(w->a)) return std::nullopt;
      return ty_eps();
    }
    case WKind::Eval: {
      auto t = type_of(w->a);
      if (!t || (*t)->kind != TyKind::Epsilon) return std::nullopt;
      return w->ty;
    }
  }
  return std::nullopt;
}

static std::optional<std::string> formation_error_at(const WffPtr& w, Path& p) {
  auto fail = [&](const std::string& msg) -> std::optional<std::string> {
    return "at " + path_str(p) + ": " + msg;
  };
  auto descend = [&](Sel s, const WffPtr& c) -> std::optional<std::string> {
    p.push_back(s);
    auto r = formation_error_at(c, p);
    p.pop_back();
    return r;
  };
  switch (w->kind) {
    case WKind::Var:
    case WKind::Const: return std::nullopt;
    case WKind::App: {
      if (auto e = descend(Sel::Fn, w->a)) return e;
      if (auto e = descend(Sel::Arg, w->b)) return e;
      auto f = *type_of(w->a);
      auto x = *type_of(w->b);
      if (f->kind != TyKind::Fun)
        return fail("application of non-function of type " + ty_str(f));
      if (!ty_eq(f->b, x))
        return fail("argument type " + ty_str(x) + " does not match expected " + ty_str(f->b));
      return std::nullopt;
    }
    case WKind::Abs:
      if (w->a->kind != WKind::Var) return fail("abstraction binder is not a variable");
      return descend(Sel::Body, w->b);
    case WKind::Cond: {
      if (auto e = descend(Sel::Test, w->a)) return e;
      if (auto e = descend(Sel::Then, w->b)) return e;
      if (auto e = descend(Sel::Else, w->c)) return e;
      if ((*type_of(w->a))->kind != TyKind::Omicron)
        return fail("conditional test has type " + ty_str(*type_of(w->a)) + ", expected o");
      if (!ty_eq(*type_of(w->b), *type_of(w->c)))
        return fail("conditional branches have distinct types");
      return std::nullopt;
    }
    case WKind::Quote: return descend(Sel::QBody, w->a);
    case WKind::Eval: {
      if (auto e = descend(Sel::EBody, w->a)) return e;
      if ((*type_of(w->a))->kind != TyKind::Epsilon)
        return fail("evaluation argument has type " + ty_str(*type_of(w->a)) + ", expected eps");
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<std::string> formation_error(const WffPtr& w) {
  Path p;
  return formation_error_at(w, p);
}

std::size_t wff_size(const WffPtr& w) {
  switch (w->kind) {
    case WKind::Var:
    case WKind::Const: return 1;
    case WKind::App:
    case WKind::Abs: return wff_size(w->a) + wff_size(w->b);
    case WKind::Cond: return wff_size(w->a) + wff_size(w->b) + wff_size(w->c);
    case WKind::Quote:
    case WKind::Eval: return wff_size(w->a);
  }
  return 0;
}

static std::size_t eval_count(const WffPtr& w) {
  switch (w->kind) {
    case WKind::Var:
    case WKind::Const: return 0;
    case WKind::App:
    case WKind::Abs: return eval_count(w->a) + eval_count(w->b);
    case WKind::Cond: return eval_count(w->a) + eval_count(w->b) + eval_count(w->c);
    case WKind::Quote: return 0;
    case WKind::Eval: return 1 + eval_count(w->a);
  }
  return 0;
}

std::pair<std::size_t, std::size_t> wff_complexity(const WffPtr& w) {
  return {eval_count(w), wff_size(w)};
}

bool is_evaluation_free(const WffPtr& w) { return eval_count(w) == 0; }

static void collect_free(const WffPtr& w, std::vector<WffPtr>& bound,
                         std::vector<WffPtr>& out) {
  switch (w->kind) {
    case WKind::Var: {
      for (auto& b : bound)
        if (wff_eq(b, w)) return;
      for (auto& f : out)
        if (wff_eq(f, w)) return;
      out.push_back(w);
      return;
    }
    case WKind::Const: return;
    case WKind::App:
      collect_free(w->a, bound, out);
      collect_free(w->b, bound, out);
      return;
    case WKind::Abs:
      bound.push_back(w->a);
      collect_free(w->b, bound, out);
      bound.pop_back();
      return;
    case WKind::Cond:
      collect_free(w->a, bound, out);
      collect_free(w->b, bound, out);
      collect_free(w->c, bound, out);
      return;
    case WKind::Quote: return;
    case WKind::Eval: collect_free(w->a, bound, out); return;
  }
}

std::vector<WffPtr> free_vars_surface(const WffPtr& w) {
  std::vector<WffPtr> bound, out;
  collect_free(w, bound, out);
  return out;
}

static void collect_all(const WffPtr& w, std::vector<WffPtr>& out) {
  switch (w->kind) {
    case WKind::Var: {
      for (auto& f : out)
        if (wff_eq(f, w)) return;
      out.push_back(w);
      return;
    }
    case WKind::Const: return;
    case WKind::App:
    case WKind::Abs:
      collect_all(w->a, out);
      collect_all(w->b, out);
      return;
    case WKind::Cond:
      collect_all(w->a, out);
      collect_all(w->b, out);
      collect_all(w->c, out);
      return;
    case WKind::Quote: collect_all(w->a, out); return;
    case WKind::Eval: collect_all(w->a, out); return;
  }
}

std::vector<WffPtr> all_vars(const WffPtr& w) {
  std::vector<WffPtr> out;
  collect_all(w, out);
  return out;
}

bool var_occurs(const WffPtr& v, const WffPtr& w) {
  switch (w->kind) {
    case WKind::Var: return wff_eq(v, w);
    case WKind::Const: return false;
    case WKind::App:
    case WKind::Abs: return var_occurs(v, w->a) || var_occurs(v, w->b);
    case WKind::Cond:
      return var_occurs(v, w->a) || var_occurs(v, w->b) || var_occurs(v, w->c);
    case WKind::Quote:
    case WKind::Eval: return var_occurs(v, w->a);
  }
  return false;
}

static std::optional<WffPtr> child(const WffPtr& w, Sel s) {
  switch (s) {
    case Sel::Fn: return w->kind == WKind::App ? std::optional<WffPtr>(w->a) : std::nullopt;
    case Sel::Arg: return w->kind == WKind::App ? std::optional<WffPtr>(w->b) : std::nullopt;
    case Sel::Binder: return w->kind == WKind::Abs ? std::optional<WffPtr>(w->a) : std::nullopt;
    case Sel::Body: return w->kind == WKind::Abs ? std::optional<WffPtr>(w->b) : std::nullopt;
    case Sel::Test: return w->kind == WKind::Cond ? std::optional<WffPtr>(w->a) : std::nullopt;
    case Sel::Then: return w->kind == WKind::Cond ? std::optional<WffPtr>(w->b) : std::nullopt;
    case Sel::Else: return w->kind == WKind::Cond ? std::optional<WffPtr>(w->c) : std::nullopt;
    case Sel::QBody: return w->kind == WKind::Quote ? std::optional<WffPtr>(w->a) : std::nullopt;
    case Sel::EBody: return w->kind == WKind::Eval ? std::optional<WffPtr>(w->a) : std::nullopt;
  }
  return std::nullopt;
}

std::optional<WffPtr> subterm_at(const WffPtr& w, const Path& p) {
  WffPtr cur = w;
  for (Sel s : p) {
    auto c = child(cur, s);
    if (!c) return std::nullopt;
    cur = *c;
  }
  return cur;
}

std::optional<WffPtr> replace_at(const WffPtr& w, const Path& p, const WffPtr& r) {
  if (p.empty()) return r;
  Sel s = p.front();
  Path rest(p.begin() + 1, p.end());
  auto c = child(w, s);
  if (!c) return std::nullopt;
  auto nc = replace_at(*c, rest, r);
  if (!nc) return std::nullopt;
  switch (w->kind) {
    case WKind::App:
      return s == Sel::Fn ? mk_app(*nc, w->b) : mk_app(w->a, *nc);
    case WKind::Abs:
      return s == Sel::Binder ? mk_abs(*nc, w->b) : mk_abs(w->a, *nc);
    case WKind::Cond:
      if (s == Sel::Test) return mk_cond(*nc, w->b, w->c);
      if (s == Sel::Then) return mk_cond(w->a, *nc, w->c);
      return mk_cond(w->a, w->b, *nc);
    case WKind::Quote: return mk_quote(*nc);
    case WKind::Eval: return mk_eval(*nc, w->ty);
    default: return std::nullopt;
  }
}

static const char* sel_name(Sel s) {
  switch (s) {
    case Sel::Fn: return "fn";
    case Sel::Arg: return "arg";
    case Sel::Binder: return "binder";
    case Sel::Body: return "body";
    case Sel::Test: return "test";
    case Sel::Then: return "then";
    case Sel::Else: return "else";
    case Sel::QBody: return "qbody";
    case Sel::EBody: return "ebody";
  }
  return "?";
}

std::string path_str(const Path& p) {
  if (p.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ".";
    out += sel_name(p[i]);
  }
  return out;
}

std::optional<Path> parse_path(const std::string& s) {
  Path p;
  if (s == "root" || s == "." || s.empty()) return p;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (part == "fn") p.push_back(Sel::Fn);
    else if (part == "arg") p.push_back(Sel::Arg);
    else if (part == "binder") p.push_back(Sel::Binder);
    else if (part == "body") p.push_back(Sel::Body);
    else if (part == "test") p.push_back(Sel::Test);
    else if (part == "then") p.push_back(Sel::Then);
    else if (part == "else") p.push_back(Sel::Else);
    else if (part == "qbody") p.push_back(Sel::QBody);
    else if (part == "ebody") p.push_back(Sel::EBody);
    else return std::nullopt;
  }
  return p;
}

}  // namespace quqe
