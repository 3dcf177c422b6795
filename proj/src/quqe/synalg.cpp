#include "synalg.hpp"

#include "sugar.hpp"

namespace quqe {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}
Tri tri_or(Tri a, Tri b) {
  if (a == Tri::True || b == Tri::True) return Tri::True;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::False;
}
Tri tri_not(Tri a) {
  if (a == Tri::Unknown) return Tri::Unknown;
  return a == Tri::True ? Tri::False : Tri::True;
}
const char* tri_str(Tri t) {
  switch (t) {
    case Tri::True: return "True";
    case Tri::False: return "False";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

// Recursion guard shared by the mutually recursive evaluators.
thread_local int depth_guard = 0;
struct Guard {
  bool ok;
  Guard() : ok(++depth_guard < 10000) {}
  ~Guard() { --depth_guard; }
};

std::optional<WffPtr> pair_project(const Signature& sig, const WffPtr& w, bool first,
                                   bool* undefined);

}  // namespace

bool syn_var_p(const WffPtr& d) { return d->kind == WKind::Var; }
bool syn_con_p(const Signature& sig, const WffPtr& d) {
  return is_primitive_const(sig, d);
}
std::optional<TypePtr> wff_type(const WffPtr& d) { return type_of(d); }
bool eval_free_p(const WffPtr& d) { return is_evaluation_free(d); }

PartialResult epsilon_eval(const Signature& sig, const WffPtr& w) {
  Guard g;
  if (!g.ok) return PartialResult::unknown();
  if (w->kind == WKind::Quote) {
    if (!type_of(w->a)) return PartialResult::undefined();
    return PartialResult::defined(w->a);
  }
  if (w->kind == WKind::Var) return PartialResult::unknown();
  if (w->kind == WKind::Eval) return PartialResult::unknown();
  if (is_bottom(w)) return PartialResult::undefined();
  if (w->kind == WKind::Cond) {
    Tri t = eval_formula(sig, w->a);
    if (t == Tri::Unknown) return PartialResult::unknown();
    return epsilon_eval(sig, t == Tri::True ? w->b : w->c);
  }
  if (w->kind == WKind::App) {
    // fst/snd projection at result type eps
    if (auto f = match_fst(w->a)) {
      bool und = false;
      auto p = pair_project(sig, w->b, true, &und);
      if (und) return PartialResult::undefined();
      if (!p) return PartialResult::unknown();
      return epsilon_eval(sig, *p);
    }
    if (auto s = match_snd(w->a)) {
      bool und = false;
      auto p = pair_project(sig, w->b, false, &und);
      if (und) return PartialResult::undefined();
      if (!p) return PartialResult::unknown();
      return epsilon_eval(sig, *p);
    }
    std::vector<WffPtr> args;
    WffPtr h = w;
    while (h->kind == WKind::App) {
      args.insert(args.begin(), h->b);
      h = h->a;
    }
    if (h->kind == WKind::Const) {
      const std::string& n = h->name;
      if (is_constructor_const(h)) {
        std::vector<WffPtr> vals;
        for (auto& a : args) {
          PartialResult r = epsilon_eval(sig, a);
          if (r.tag != PartialResult::Defined) return r;
          vals.push_back(r.value);
        }
        if (n == "app" && vals.size() == 2) {
          WffPtr r = mk_app(vals[0], vals[1]);
          if (!type_of(r)) return PartialResult::undefined();
          return PartialResult::defined(r);
        }
        if (n == "abs" && vals.size() == 2) {
          if (vals[0]->kind != WKind::Var) return PartialResult::undefined();
          return PartialResult::defined(mk_abs(vals[0], vals[1]));
        }
        if (n == "cond" && vals.size() == 3) {
          WffPtr r = mk_cond(vals[0], vals[1], vals[2]);
          if (!type_of(r)) return PartialResult::undefined();
          return PartialResult::defined(r);
        }
        if (n == "quot" && vals.size() == 1)
          return PartialResult::defined(mk_quote(vals[0]));
        if (n == "eval" && vals.size() == 2) {
          auto bt = type_of(vals[0]);
          if (!bt || (*bt)->kind != TyKind::Epsilon || vals[1]->kind != WKind::Var)
            return PartialResult::undefined();
          return PartialResult::defined(mk_eval(vals[0], vals[1]->ty));
        }
        return PartialResult::unknown();
      }
      if (n == "cleanse" && args.size() == 1 && ty_eq(h->ty, c_cleanse()->ty)) {
        PartialResult r = epsilon_eval(sig, args[0]);
        if (r.tag != PartialResult::Defined) return r;
        return cleanse(sig, r.value);
      }
      if (n == "sub" && args.size() == 3 && ty_eq(h->ty, c_sub()->ty)) {
        PartialResult ra = epsilon_eval(sig, args[0]);
        if (ra.tag != PartialResult::Defined) return ra;
        PartialResult rx = epsilon_eval(sig, args[1]);
        if (rx.tag != PartialResult::Defined) return rx;
        PartialResult rb = epsilon_eval(sig, args[2]);
        if (rb.tag != PartialResult::Defined) return rb;
        return subst(sig, ra.value, rx.value, rb.value);
      }
    }
  }
  return PartialResult::unknown();
}

namespace {

// Structural pair evaluation used for fst/snd in construction expressions.
std::optional<WffPtr> pair_project(const Signature& sig, const WffPtr& w, bool first,
                                   bool* undefined) {
  Guard g;
  if (!g.ok) return std::nullopt;
  if (is_bottom(w)) {
    *undefined = true;
    return std::nullopt;
  }
  // pair A B
  if (w->kind == WKind::App && w->a->kind == WKind::App) {
    const WffPtr& h = w->a->a;
    if (h->kind == WKind::Const && h->name == "pair" &&
        is_logical_const("pair", h->ty))
      return first ? w->a->b : w->b;
  }
  // fst/snd chain
  if (w->kind == WKind::App) {
    bool inner_first;
    if (match_fst(w->a)) inner_first = true;
    else if (match_snd(w->a)) inner_first = false;
    else return std::nullopt;
    auto p = pair_project(sig, w->b, inner_first, undefined);
    if (!p) return std::nullopt;
    return pair_project(sig, *p, first, undefined);
  }
  return std::nullopt;
}

}  // namespace

Tri not_free_in(const Signature& sig, const WffPtr& v, const WffPtr& d) {
  Guard g;
  if (!g.ok) return Tri::Unknown;
  if (v->kind != WKind::Var) return Tri::True;
  switch (d->kind) {
    case WKind::Var: return wff_eq(d, v) ? Tri::False : Tri::True;
    case WKind::Const: return Tri::True;
    case WKind::App:
      return tri_and(not_free_in(sig, v, d->a), not_free_in(sig, v, d->b));
    case WKind::Abs:
      if (wff_eq(d->a, v)) return Tri::True;
      return not_free_in(sig, v, d->b);
    case WKind::Cond:
      return tri_and(not_free_in(sig, v, d->a),
                     tri_and(not_free_in(sig, v, d->b), not_free_in(sig, v, d->c)));
    case WKind::Quote: return Tri::True;
    case WKind::Eval: {
      const WffPtr& body = d->a;
      if (!is_evaluation_free(body)) return Tri::False;
      Tri c1 = syn_closed_p(sig, body);
      PartialResult r = epsilon_eval(sig, body);
      // The oracle's verdict takes priority: an unevaluable body makes the
      // clause undecidable even when another conjunct is already false.
      if (r.tag == PartialResult::Unknown) return Tri::Unknown;
      if (r.tag == PartialResult::Undefined) return Tri::False;
      bool c3 = is_evaluation_free(r.value) &&
                type_of(r.value) && ty_eq(*type_of(r.value), d->ty);
      if (!c3) return tri_and(c1, Tri::False);
      return tri_and(c1, not_free_in(sig, v, r.value));
    }
  }
  return Tri::Unknown;
}

Tri syn_closed_p(const Signature& sig, const WffPtr& d) {
  Tri acc = Tri::True;
  for (const WffPtr& v : all_vars(d)) acc = tri_and(acc, not_free_in(sig, v, d));
  // The quantification ranges over every variable. For terms with residual
  // evaluations a non-occurring variable can still get an Unknown verdict, so
  // probe with a representative fresh variable.
  if (!is_evaluation_free(d))
    acc = tri_and(acc, not_free_in(sig, mk_var("%fresh", ty_i()), d));
  return acc;
}

PartialResult cleanse(const Signature& sig, const WffPtr& d) {
  Guard g;
  if (!g.ok) return PartialResult::unknown();
  switch (d->kind) {
    case WKind::Var:
    case WKind::Const:
    case WKind::Quote: return PartialResult::defined(d);
    case WKind::App: {
      PartialResult ra = cleanse(sig, d->a);
      if (ra.tag != PartialResult::Defined) return ra;
      PartialResult rb = cleanse(sig, d->b);
      if (rb.tag != PartialResult::Defined) return rb;
      return PartialResult::defined(mk_app(ra.value, rb.value));
    }
    case WKind::Abs: {
      PartialResult rb = cleanse(sig, d->b);
      if (rb.tag != PartialResult::Defined) return rb;
      return PartialResult::defined(mk_abs(d->a, rb.value));
    }
    case WKind::Cond: {
      PartialResult ra = cleanse(sig, d->a);
      if (ra.tag != PartialResult::Defined) return ra;
      PartialResult rb = cleanse(sig, d->b);
      if (rb.tag != PartialResult::Defined) return rb;
      PartialResult rc = cleanse(sig, d->c);
      if (rc.tag != PartialResult::Defined) return rc;
      return PartialResult::defined(mk_cond(ra.value, rb.value, rc.value));
    }
    case WKind::Eval: {
      PartialResult re = cleanse(sig, d->a);
      if (re.tag != PartialResult::Defined) return re;
      const WffPtr& e = re.value;  // evaluation-free by construction
      Tri t1 = syn_closed_p(sig, e);
      if (t1 == Tri::False) return PartialResult::undefined();
      if (t1 == Tri::Unknown) return PartialResult::unknown();
      PartialResult r = epsilon_eval(sig, e);
      if (r.tag != PartialResult::Defined) return r;
      if (!is_evaluation_free(r.value) || !type_of(r.value) ||
          !ty_eq(*type_of(r.value), d->ty))
        return PartialResult::undefined();
      return PartialResult::defined(r.value);
    }
  }
  return PartialResult::unknown();
}

PartialResult subst(const Signature& sig, const WffPtr& a, const WffPtr& x,
                    const WffPtr& d) {
  Guard g;
  if (!g.ok) return PartialResult::unknown();
  if (x->kind != WKind::Var) return PartialResult::undefined();
  auto at = type_of(a);
  if (!at || !ty_eq(*at, x->ty)) return PartialResult::undefined();
  switch (d->kind) {
    case WKind::Var:
      if (wff_eq(d, x)) return cleanse(sig, a);
      return PartialResult::defined(d);
    case WKind::Const:
    case WKind::Quote: return PartialResult::defined(d);
    case WKind::App: {
      PartialResult ra = subst(sig, a, x, d->a);
      if (ra.tag != PartialResult::Defined) return ra;
      PartialResult rb = subst(sig, a, x, d->b);
      if (rb.tag != PartialResult::Defined) return rb;
      return PartialResult::defined(mk_app(ra.value, rb.value));
    }
    case WKind::Abs: {
      if (wff_eq(d->a, x)) {
        PartialResult rb = cleanse(sig, d->b);
        if (rb.tag != PartialResult::Defined) return rb;
        return PartialResult::defined(mk_abs(d->a, rb.value));
      }
      Tri ok = tri_or(not_free_in(sig, x, d->b), not_free_in(sig, d->a, a));
      if (ok == Tri::False) return PartialResult::undefined();
      if (ok == Tri::Unknown) return PartialResult::unknown();
      PartialResult rb = subst(sig, a, x, d->b);
      if (rb.tag != PartialResult::Defined) return rb;
      return PartialResult::defined(mk_abs(d->a, rb.value));
    }
    case WKind::Cond: {
      PartialResult ra = subst(sig, a, x, d->a);
      if (ra.tag != PartialResult::Defined) return ra;
      PartialResult rb = subst(sig, a, x, d->b);
      if (rb.tag != PartialResult::Defined) return rb;
      PartialResult rc = subst(sig, a, x, d->c);
      if (rc.tag != PartialResult::Defined) return rc;
      return PartialResult::defined(mk_cond(ra.value, rb.value, rc.value));
    }
    case WKind::Eval: {
      PartialResult r1 = subst(sig, a, x, d->a);
      if (r1.tag != PartialResult::Defined) return r1;
      const WffPtr& e1 = r1.value;  // evaluation-free by construction
      Tri t1 = syn_closed_p(sig, e1);
      if (t1 == Tri::False) return PartialResult::undefined();
      if (t1 == Tri::Unknown) return PartialResult::unknown();
      PartialResult r = epsilon_eval(sig, e1);
      if (r.tag != PartialResult::Defined) return r;
      if (!is_evaluation_free(r.value) || !type_of(r.value) ||
          !ty_eq(*type_of(r.value), d->ty))
        return PartialResult::undefined();
      return subst(sig, a, x, r.value);
    }
  }
  return PartialResult::unknown();
}

Tri eval_formula(const Signature& sig, const WffPtr& f) {
  Guard g;
  if (!g.ok) return Tri::Unknown;
  if (is_true(f)) return Tri::True;
  if (is_false(f)) return Tri::False;
  if (auto n = match_not(f)) return tri_not(eval_formula(sig, *n));
  if (auto a = match_and(f))
    return tri_and(eval_formula(sig, a->a), eval_formula(sig, a->b));
  if (auto o = match_or(f))
    return tri_or(eval_formula(sig, o->a), eval_formula(sig, o->b));
  if (auto im = match_implies(f))
    return tri_or(tri_not(eval_formula(sig, im->a)), eval_formula(sig, im->b));
  if (auto dd = match_defined(f)) {
    const WffPtr& w = *dd;
    auto t = type_of(w);
    if (!t) return Tri::Unknown;
    if ((*t)->kind == TyKind::Omicron) return Tri::True;
    if (is_bottom(w)) return Tri::False;
    if (w->kind == WKind::Var || w->kind == WKind::Const ||
        w->kind == WKind::Abs || w->kind == WKind::Quote)
      return Tri::True;
    if ((*t)->kind == TyKind::Epsilon) {
      PartialResult r = epsilon_eval(sig, w);
      if (r.tag == PartialResult::Defined) return Tri::True;
      if (r.tag == PartialResult::Undefined) return Tri::False;
    }
    return Tri::Unknown;
  }
  if (auto eq = match_eq(f)) {
    auto t = type_of(eq->a);
    if (!t) return Tri::Unknown;
    if ((*t)->kind == TyKind::Epsilon) {
      PartialResult ra = epsilon_eval(sig, eq->a);
      PartialResult rb = epsilon_eval(sig, eq->b);
      if (ra.tag == PartialResult::Unknown || rb.tag == PartialResult::Unknown)
        return Tri::Unknown;
      if (ra.tag == PartialResult::Undefined || rb.tag == PartialResult::Undefined)
        return Tri::False;
      return wff_eq(ra.value, rb.value) ? Tri::True : Tri::False;
    }
    if ((*t)->kind == TyKind::Omicron) {
      Tri ta = eval_formula(sig, eq->a);
      Tri tb = eval_formula(sig, eq->b);
      if (ta == Tri::Unknown || tb == Tri::Unknown) return Tri::Unknown;
      return ta == tb ? Tri::True : Tri::False;
    }
    return Tri::Unknown;
  }
  // predicate applications
  if (f->kind == WKind::App) {
    std::vector<WffPtr> args;
    WffPtr h = f;
    while (h->kind == WKind::App) {
      args.insert(args.begin(), h->b);
      h = h->a;
    }
    auto arg_val = [&](const WffPtr& a, PartialResult* out) {
      *out = epsilon_eval(sig, a);
    };
    if (h->kind == WKind::Const && args.size() == 1 && ty_eq(h->ty, c_var()->ty)) {
      PartialResult r;
      arg_val(args[0], &r);
      if (r.tag == PartialResult::Unknown) return Tri::Unknown;
      if (r.tag == PartialResult::Undefined) return Tri::False;
      if (h->name == "var") return r.value->kind == WKind::Var ? Tri::True : Tri::False;
      if (h->name == "con")
        return is_primitive_const(sig, r.value) ? Tri::True : Tri::False;
      if (h->name == "eval-free")
        return is_evaluation_free(r.value) ? Tri::True : Tri::False;
      if (auto alpha = wff_pred_param(h)) {
        auto vt = type_of(r.value);
        return vt && ty_eq(*vt, *alpha) ? Tri::True : Tri::False;
      }
    }
    if (h->kind == WKind::Const && h->name == "not-free-in" && args.size() == 2 &&
        ty_eq(h->ty, c_nfi()->ty)) {
      PartialResult rv, rc;
      arg_val(args[0], &rv);
      arg_val(args[1], &rc);
      if (rv.tag == PartialResult::Unknown || rc.tag == PartialResult::Unknown)
        return Tri::Unknown;
      if (rv.tag == PartialResult::Undefined || rc.tag == PartialResult::Undefined)
        return Tri::False;
      return not_free_in(sig, rv.value, rc.value);
    }
    if (args.size() == 1 && is_synclosed_head(h)) {
      PartialResult r;
      arg_val(args[0], &r);
      if (r.tag == PartialResult::Unknown) return Tri::Unknown;
      if (r.tag == PartialResult::Undefined) return Tri::False;
      return syn_closed_p(sig, r.value);
    }
    // var^a / con^a / eval-free^a expansions applied to an argument
    if (args.size() == 1 && h->kind == WKind::Abs) {
      if (auto body_and = match_and(h->b)) {
        if (body_and->b->kind == WKind::App &&
            body_and->b->a->kind == WKind::Const) {
          if (auto alpha = wff_pred_param(body_and->b->a)) {
            if (wff_eq(h, mk_varpred(*alpha)) || wff_eq(h, mk_conpred(*alpha)) ||
                wff_eq(h, mk_evalfreepred(*alpha))) {
              WffPtr inner = mk_and(mk_app(body_and->a->a, args[0]),
                                    mk_app(c_wff(*alpha), args[0]));
              return eval_formula(sig, inner);
            }
          }
        }
      }
    }
  }
  return Tri::Unknown;
}

}  // namespace quqe
