#include "normalize.hpp"

#include <algorithm>
#include <vector>

#include "encode.hpp"
#include "sugar.hpp"

namespace quqe {

namespace {

bool is_pair_spine(const WffPtr& w, WffPtr* a, WffPtr* b) {
  if (w->kind != WKind::App || w->a->kind != WKind::App) return false;
  const WffPtr& h = w->a->a;
  if (h->kind != WKind::Const || h->name != "pair" ||
      !is_logical_const("pair", h->ty))
    return false;
  if (a) *a = w->a->b;
  if (b) *b = w->b;
  return true;
}

bool is_atom_wff(const WffPtr& w) {
  return w->kind == WKind::Var || w->kind == WKind::Const;
}

}  // namespace

Tri is_defined(const Signature& sig, const WffPtr& w) {
  auto t = type_of(w);
  if (!t) return Tri::Unknown;
  // every type-o wff denotes a truth value, in particular F
  if ((*t)->kind == TyKind::Omicron) return Tri::True;
  if (is_bottom(w)) return Tri::False;
  switch (w->kind) {
    case WKind::Var:
    case WKind::Const:
    case WKind::Abs:
    case WKind::Quote: return Tri::True;
    case WKind::App: {
      if (is_literal(w)) return Tri::True;
      WffPtr a, b;
      if (is_pair_spine(w, &a, &b))
        return tri_and(is_defined(sig, a), is_defined(sig, b));
      if ((*t)->kind == TyKind::Epsilon) {
        PartialResult r = epsilon_eval(sig, w);
        if (r.tag == PartialResult::Defined) return Tri::True;
        if (r.tag == PartialResult::Undefined) return Tri::False;
      }
      return Tri::Unknown;
    }
    case WKind::Cond: {
      Tri bb = tri_and(is_defined(sig, w->b), is_defined(sig, w->c));
      if (bb == Tri::True) return Tri::True;
      return Tri::Unknown;
    }
    case WKind::Eval: return Tri::Unknown;
  }
  return Tri::Unknown;
}

std::optional<bool> literal_equal(const WffPtr& a, const WffPtr& b) {
  auto da = as_construction(a);
  auto db = as_construction(b);
  if (!da || !db) return std::nullopt;
  return wff_eq(*da, *db);
}

namespace {

struct Stepper {
  const Signature& sig;

  std::optional<WffPtr> changed(const WffPtr& before, WffPtr after) {
    if (wff_eq(before, after)) return std::nullopt;
    return after;
  }

  // Root-position rewrite; nullopt when no rule applies at this node.
  std::optional<WffPtr> root_step(const WffPtr& w) {
    if (is_bottom(w)) return std::nullopt;  // canonical bottoms are inert
    switch (w->kind) {
      case WKind::Quote:
        if (!is_atom_wff(w->a)) return encode(w->a);
        return std::nullopt;
      case WKind::Eval: return eval_step(w);
      case WKind::Cond:
        if (is_true(w->a)) return w->b;
        if (is_false(w->a)) return w->c;
        return std::nullopt;
      case WKind::App: return app_step(w);
      default: return std::nullopt;
    }
  }

  std::optional<WffPtr> eval_step(const WffPtr& w) {
    const WffPtr& e = w->a;
    if (is_bottom(e)) return mk_bottom(w->ty);
    if (e->kind == WKind::Cond)  // push evaluation over the conditional
      return mk_cond(e->a, mk_eval(e->b, w->ty), mk_eval(e->c, w->ty));
    if (auto d = as_construction(e)) {
      auto dt = type_of(*d);
      if (is_evaluation_free(*d) && dt && ty_eq(*dt, w->ty)) return *d;
      return mk_bottom(w->ty);
    }
    return std::nullopt;
  }

  std::optional<WffPtr> beta_step(const WffPtr& w) {
    const WffPtr x = w->a->a;  // binder
    const WffPtr B = w->a->b;  // body
    const WffPtr A = w->b;     // argument
    auto wty = type_of(w);
    if (wff_eq(B, x)) return A;
    Tri d = is_defined(sig, A);
    if (d == Tri::False && wty) return mk_bottom(*wty);
    if (d == Tri::True) {
      // substitution in one step when it is defined; the structural rules
      // below only serve redexes the substitution operation cannot decide
      PartialResult r = subst(sig, A, x, B);
      if (r.tag == PartialResult::Defined) return r.value;
    }
    if (wff_eq(A, x)) return B;
    if (B->kind == WKind::App)
      return mk_app(mk_app(mk_abs(x, B->a), A), mk_app(mk_abs(x, B->b), A));
    if (B->kind == WKind::Cond)
      return mk_cond(mk_app(mk_abs(x, B->a), A), mk_app(mk_abs(x, B->b), A),
                     mk_app(mk_abs(x, B->c), A));
    if (d != Tri::True) return std::nullopt;  // blocked
    if (B->kind == WKind::Var || B->kind == WKind::Const ||
        B->kind == WKind::Quote)
      return B;
    if (B->kind == WKind::Abs) {
      if (wff_eq(B->a, x)) return B;
      Tri ok = tri_or(not_free_in(sig, x, B->b), not_free_in(sig, B->a, A));
      if (ok == Tri::True)
        return mk_abs(B->a, mk_app(mk_abs(x, B->b), A));
    }
    return std::nullopt;  // blocked
  }

  std::optional<WffPtr> app_step(const WffPtr& w) {
    auto wty = type_of(w);
    // pair projections take priority over unfolding the projection body
    bool fst_head = match_fst(w->a).has_value();
    bool snd_head = match_snd(w->a).has_value();
    if (!fst_head && !snd_head && w->a->kind == WKind::Abs) {
      if (auto r = beta_step(w)) return changed(w, *r);
    }
    if (fst_head || snd_head) {
      WffPtr pa, pb;
      if (is_pair_spine(w->b, &pa, &pb)) {
        Tri other = is_defined(sig, fst_head ? pb : pa);
        if (other == Tri::True) return fst_head ? pa : pb;
        if (other == Tri::False && wty) return mk_bottom(*wty);
        return std::nullopt;
      }
      if (is_bottom(w->b) && wty) return mk_bottom(*wty);
      return std::nullopt;
    }
    // truth tables for the canonical connectives
    if (auto an = match_and(w)) {
      if (is_false(an->a) || is_false(an->b)) return mk_false();
      if (is_true(an->a)) return an->b;
      if (is_true(an->b)) return an->a;
    }
    if (auto oo = match_or(w)) {
      if (is_true(oo->a) || is_true(oo->b)) return mk_true();
      if (is_false(oo->a)) return oo->b;
      if (is_false(oo->b)) return oo->a;
    }
    if (auto im = match_implies(w)) {
      if (is_false(im->a) || is_true(im->b)) return mk_true();
      if (is_true(im->a)) return im->b;
      if (wff_eq(im->a, im->b)) return mk_true();
    }
    // syn-closed expansion applied to a construction
    if (is_synclosed_head(w->a)) {
      if (is_bottom(w->b)) return mk_false();
      if (auto d = as_construction(w->b)) {
        Tri t = syn_closed_p(sig, *d);
        if (t == Tri::True) return mk_true();
        if (t == Tri::False) return mk_false();
        return std::nullopt;
      }
      return std::nullopt;
    }
    // spine with constant head
    std::vector<WffPtr> args;
    WffPtr h = w;
    while (h->kind == WKind::App) {
      args.insert(args.begin(), h->b);
      h = h->a;
    }
    if (h->kind == WKind::Const) {
      if (auto r = const_head_step(w, h, args)) return r;
    }
    // reflexive equality of defined terms; equality of constructions
    if (auto eq = match_eq(w)) {
      auto t = type_of(eq->a);
      if (t && (*t)->kind == TyKind::Epsilon) {
        if (auto le = literal_equal(eq->a, eq->b))
          return changed(w, *le ? mk_true() : mk_false());
      }
      if (t && (*t)->kind == TyKind::Omicron) {
        bool la = is_true(eq->a) || is_false(eq->a);
        bool lb = is_true(eq->b) || is_false(eq->b);
        if (la && lb)
          return changed(w, is_true(eq->a) == is_true(eq->b) ? mk_true()
                                                             : mk_false());
      }
      if (wff_eq(eq->a, eq->b) && is_defined(sig, eq->a) == Tri::True)
        return changed(w, mk_true());
    }
    // strictness: an application with an undefined part collapses
    if (is_defined(sig, w->b) == Tri::False || is_defined(sig, w->a) == Tri::False) {
      if (wty) return changed(w, mk_bottom(*wty));
    }
    return std::nullopt;
  }

  std::optional<WffPtr> const_head_step(const WffPtr& w, const WffPtr& h,
                                        const std::vector<WffPtr>& args) {
    const std::string& n = h->name;
    auto tri_out = [&](Tri t) -> std::optional<WffPtr> {
      if (t == Tri::True) return mk_true();
      if (t == Tri::False) return mk_false();
      return std::nullopt;
    };
    auto con_arg = [&](const WffPtr& a) { return as_construction(a); };
    if (is_constructor_const(h)) {
      std::size_t want = n == "cond" ? 3 : n == "quot" ? 1 : 2;
      if (args.size() != want) return std::nullopt;
      std::vector<WffPtr> ds;
      for (auto& a : args) {
        if (is_bottom(a)) return mk_bottom(ty_eps());
        auto d = con_arg(a);
        if (!d) return std::nullopt;
        ds.push_back(*d);
      }
      WffPtr built;
      if (n == "app") built = mk_app(ds[0], ds[1]);
      else if (n == "abs") {
        if (ds[0]->kind != WKind::Var) return mk_bottom(ty_eps());
        built = mk_abs(ds[0], ds[1]);
      } else if (n == "cond") built = mk_cond(ds[0], ds[1], ds[2]);
      else if (n == "quot") built = mk_quote(ds[0]);
      else {  // eval
        auto bt = type_of(ds[0]);
        if (!bt || (*bt)->kind != TyKind::Epsilon || ds[1]->kind != WKind::Var)
          return mk_bottom(ty_eps());
        built = mk_eval(ds[0], ds[1]->ty);
      }
      if (!type_of(built)) return mk_bottom(ty_eps());
      return changed(w, encode(built));
    }
    if ((n == "var" || n == "con" || n == "eval-free") && args.size() == 1 &&
        ty_eq(h->ty, c_var()->ty)) {
      if (is_bottom(args[0])) return mk_false();
      auto d = con_arg(args[0]);
      if (!d) return std::nullopt;
      if (n == "var") return tri_out((*d)->kind == WKind::Var ? Tri::True : Tri::False);
      if (n == "con")
        return tri_out(is_primitive_const(sig, *d) ? Tri::True : Tri::False);
      return tri_out(is_evaluation_free(*d) ? Tri::True : Tri::False);
    }
    if (auto alpha = wff_pred_param(h); alpha && args.size() == 1) {
      if (is_bottom(args[0])) return mk_false();
      auto d = con_arg(args[0]);
      if (!d) return std::nullopt;
      auto dt = type_of(*d);
      return tri_out(dt && ty_eq(*dt, *alpha) ? Tri::True : Tri::False);
    }
    if (n == "not-free-in" && args.size() == 2 && ty_eq(h->ty, c_nfi()->ty)) {
      if (is_bottom(args[0]) || is_bottom(args[1])) return mk_false();
      auto dv = con_arg(args[0]);
      auto dc = con_arg(args[1]);
      if (!dv || !dc) return std::nullopt;
      return tri_out(not_free_in(sig, *dv, *dc));
    }
    if (n == "cleanse" && args.size() == 1 && ty_eq(h->ty, c_cleanse()->ty)) {
      if (is_bottom(args[0])) return mk_bottom(ty_eps());
      auto d = con_arg(args[0]);
      if (!d) return std::nullopt;
      PartialResult r = cleanse(sig, *d);
      if (r.tag == PartialResult::Defined) return encode(r.value);
      if (r.tag == PartialResult::Undefined) return mk_bottom(ty_eps());
      return std::nullopt;
    }
    if (n == "sub" && args.size() == 3 && ty_eq(h->ty, c_sub()->ty)) {
      for (auto& a : args)
        if (is_bottom(a)) return mk_bottom(ty_eps());
      auto da = con_arg(args[0]);
      auto dx = con_arg(args[1]);
      auto db = con_arg(args[2]);
      if (!da || !dx || !db) return std::nullopt;
      PartialResult r = subst(sig, *da, *dx, *db);
      if (r.tag == PartialResult::Defined) return encode(r.value);
      if (r.tag == PartialResult::Undefined) return mk_bottom(ty_eps());
      return std::nullopt;
    }
    return std::nullopt;
  }

  // Leftmost-outermost: root rules first, then children (never under Quote).
  std::optional<WffPtr> step(const WffPtr& w) {
    if (is_bottom(w)) return std::nullopt;
    if (auto r = root_step(w)) return r;
    switch (w->kind) {
      case WKind::App:
        if (auto r = step(w->a)) return mk_app(*r, w->b);
        if (auto r = step(w->b)) return mk_app(w->a, *r);
        return std::nullopt;
      case WKind::Abs:
        if (auto r = step(w->b)) return mk_abs(w->a, *r);
        return std::nullopt;
      case WKind::Cond:
        if (auto r = step(w->a)) return mk_cond(*r, w->b, w->c);
        if (auto r = step(w->b)) return mk_cond(w->a, *r, w->c);
        if (auto r = step(w->c)) return mk_cond(w->a, w->b, *r);
        return std::nullopt;
      case WKind::Eval:
        if (auto r = step(w->a)) return mk_eval(*r, w->ty);
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  // Stuck scan over a normal form (Quote bodies skipped).
  bool blocked(const WffPtr& w) {
    if (is_bottom(w)) return false;
    switch (w->kind) {
      case WKind::Var:
      case WKind::Const:
      case WKind::Quote: return false;
      case WKind::Eval: return true;  // unresolved evaluation
      case WKind::Cond:
        if (!is_true(w->a) && !is_false(w->a)) return true;
        return blocked(w->a) || blocked(w->b) || blocked(w->c);
      case WKind::Abs: return blocked(w->b);
      case WKind::App: {
        if (w->a->kind == WKind::Abs) return true;  // un-fired beta
        std::vector<WffPtr> args;
        WffPtr h = w;
        while (h->kind == WKind::App) {
          args.insert(args.begin(), h->b);
          h = h->a;
        }
        if (h->kind == WKind::Const) {
          const std::string& n = h->name;
          bool pred =
              (n == "var" || n == "con" || n == "eval-free" || n == "cleanse" ||
               n == "not-free-in" || n == "sub" || n.rfind("wff^", 0) == 0 ||
               is_constructor_const(h));
          if (pred) {
            bool all = true;
            for (auto& a : args)
              if (!as_construction(a)) all = false;
            if (all && !is_literal(w)) return true;  // engine returned Unknown
          }
        }
        for (auto& a : args)
          if (blocked(a)) return true;
        return blocked(h);
      }
    }
    return false;
  }
};

}  // namespace

NormResult normalize(const Signature& sig, const WffPtr& w, long fuel) {
  Stepper st{sig};
  WffPtr cur = w;
  long steps = 0;
  while (steps < fuel) {
    auto nxt = st.step(cur);
    if (!nxt) break;
    cur = *nxt;
    ++steps;
  }
  if (steps >= fuel) return {NormTag::Fuel, cur, steps};
  // at type o the canonical bottom coincides with F, which is a value
  if (is_bottom(cur) && !is_false(cur)) return {NormTag::Bottom, cur, steps};
  if (st.blocked(cur)) return {NormTag::Stuck, cur, steps};
  return {NormTag::Value, cur, steps};
}

namespace {

struct TautEnv {
  std::vector<WffPtr> atoms;
  std::string err;
  bool ok = true;

  int atom_id(const WffPtr& w) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (wff_eq(atoms[i], w)) return (int)i;
    atoms.push_back(w);
    return (int)atoms.size() - 1;
  }

  bool eval(const WffPtr& w, unsigned long mask) {
    if (is_true(w)) return true;
    if (is_false(w)) return false;
    if (auto n = match_not(w)) return !eval(*n, mask);
    if (auto a = match_and(w)) return eval(a->a, mask) && eval(a->b, mask);
    if (auto o = match_or(w)) return eval(o->a, mask) || eval(o->b, mask);
    if (auto im = match_implies(w)) return !eval(im->a, mask) || eval(im->b, mask);
    if (auto eq = match_eq(w)) {
      auto t = type_of(eq->a);
      if (t && (*t)->kind == TyKind::Omicron)
        return eval(eq->a, mask) == eval(eq->b, mask);
    }
    int id = atom_id(w);
    if (id >= 24) {
      ok = false;
      err = "tautology check exceeds 24 distinct atoms";
      return true;
    }
    return ((mask >> id) & 1u) != 0;
  }
};

}  // namespace

std::optional<bool> taut_check(const WffPtr& w, std::string* err) {
  auto t = type_of(w);
  if (!t || (*t)->kind != TyKind::Omicron) {
    if (err) *err = "tautology check requires a type-o wff";
    return std::nullopt;
  }
  TautEnv env;
  env.eval(w, 0);  // first pass collects atoms
  if (!env.ok) {
    if (err) *err = env.err;
    return std::nullopt;
  }
  std::size_t n = env.atoms.size();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (!env.eval(w, mask)) return false;
    if (!env.ok) {
      if (err) *err = env.err;
      return std::nullopt;
    }
  }
  return true;
}

}  // namespace quqe
