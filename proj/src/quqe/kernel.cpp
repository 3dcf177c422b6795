// Proof kernel: axiom schemas, inference rules, script checking, elaboration.
#include "kernel.hpp"

#include <fstream>
#include <sstream>

#include "encode.hpp"
#include "normalize.hpp"
#include "synalg.hpp"
#include "text.hpp"

namespace quqe {
namespace {

struct AxErr {
  KernelError e;
};
[[noreturn]] void axfail(std::string cls, std::string msg) {
  throw AxErr{{std::move(cls), std::move(msg)}};
}
[[noreturn]] void mfail(std::string cls, std::string msg) {
  throw MacroError{{std::move(cls), std::move(msg)}};
}

// ---------- shorthand builders over the syntactic constants ----------

WffPtr sapp(const WffPtr& a, const WffPtr& b) { return mk_app(c_app(), a, b); }
WffPtr sabs(const WffPtr& a, const WffPtr& b) { return mk_app(c_abs(), a, b); }
WffPtr scond(const WffPtr& a, const WffPtr& b, const WffPtr& c) {
  return mk_app(c_cond(), a, b, c);
}
WffPtr squot(const WffPtr& a) { return mk_app(c_quot(), a); }
WffPtr seval(const WffPtr& a, const WffPtr& b) { return mk_app(c_eval(), a, b); }
WffPtr svar(const WffPtr& a) { return mk_app(c_var(), a); }
WffPtr scon(const WffPtr& a) { return mk_app(c_con(), a); }
WffPtr sef(const WffPtr& a) { return mk_app(c_evalfree(), a); }
WffPtr snfi(const WffPtr& a, const WffPtr& b) { return mk_app(c_nfi(), a, b); }
WffPtr scl(const WffPtr& a) { return mk_app(c_cleanse(), a); }
WffPtr ssub(const WffPtr& a, const WffPtr& b, const WffPtr& c) {
  return mk_app(c_sub(), a, b, c);
}
WffPtr swff(const TypePtr& t, const WffPtr& a) { return mk_app(c_wff(t), a); }
WffPtr svarp(const TypePtr& t, const WffPtr& a) { return mk_app(mk_varpred(t), a); }
WffPtr sefp(const TypePtr& t, const WffPtr& a) {
  return mk_app(mk_evalfreepred(t), a);
}
WffPtr ssc(const WffPtr& a) { return mk_app(mk_synclosed(), a); }

WffPtr conj(const std::vector<WffPtr>& xs) {
  WffPtr r = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) r = mk_and(xs[i], r);
  return r;
}
WffPtr disj(const std::vector<WffPtr>& xs) {
  WffPtr r = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) r = mk_or(xs[i], r);
  return r;
}

bool occurs_free(const WffPtr& x, const WffPtr& w) {
  for (const auto& v : free_vars_surface(w))
    if (wff_eq(v, x)) return true;
  return false;
}

// ---------- axiom parameter access ----------

struct Ax {
  const Signature& sig;
  const AxiomParams& ps;

  WffPtr w(const std::string& k) const {
    auto it = ps.find(k);
    if (it == ps.end()) axfail("MissingParam", "missing parameter " + k);
    auto* p = std::get_if<WffPtr>(&it->second);
    if (!p || !*p) axfail("BadParam", "parameter " + k + " must be a wff");
    if (auto fe = formation_error(*p)) axfail("BadParam", k + ": " + *fe);
    if (auto bad = unknown_const(sig, *p))
      axfail("BadParam", k + ": unknown constant " + *bad);
    return *p;
  }
  TypePtr t(const std::string& k) const {
    auto it = ps.find(k);
    if (it == ps.end()) axfail("MissingParam", "missing parameter " + k);
    auto* p = std::get_if<TypePtr>(&it->second);
    if (!p || !*p) axfail("BadParam", "parameter " + k + " must be a type");
    return *p;
  }
  WffPtr v(const std::string& k) const {
    WffPtr x = w(k);
    if (x->kind != WKind::Var)
      axfail("SideCondition", "parameter " + k + " must be a variable");
    return x;
  }
  WffPtr prim(const std::string& k) const {
    WffPtr c = w(k);
    if (c->kind != WKind::Const || !is_primitive_const(sig, c))
      axfail("SideCondition", "parameter " + k + " must be a primitive constant");
    return c;
  }
  void distinct_vars(const WffPtr& a, const WffPtr& b) const {
    if (wff_eq(a, b)) axfail("SideCondition", "variables must be distinct");
  }
  void distinct_types(const TypePtr& a, const TypePtr& b) const {
    if (ty_eq(a, b)) axfail("SideCondition", "types must be distinct");
  }
  void fresh_for(const WffPtr& x, const WffPtr& w_) const {
    if (occurs_free(x, w_))
      axfail("SideCondition",
             "variable " + print_wff(x) + " must not be free in the operands");
  }
  TypePtr tyof(const WffPtr& x, const std::string& k) const {
    auto t_ = type_of(x);
    if (!t_) axfail("BadParam", "parameter " + k + " is ill-formed");
    return *t_;
  }
};

WffPtr build_induction() {
  WffPtr x = mk_var("x", ty_eps());
  WffPtr y = mk_var("y", ty_eps());
  WffPtr z = mk_var("z", ty_eps());
  WffPtr p = mk_var("p", ty_fun(ty_o(), ty_eps()));
  auto px = [&](const WffPtr& u) { return mk_app(p, u); };
  WffPtr a1 = mk_forall(x, mk_implies(svar(x), px(x)));
  WffPtr a2 = mk_forall(x, mk_implies(scon(x), px(x)));
  WffPtr a3 = mk_forall(
      x, mk_forall(y, mk_implies(conj({px(x), px(y), mk_defined(sapp(x, y))}),
                                 px(sapp(x, y)))));
  WffPtr a4 = mk_forall(
      x, mk_forall(y, mk_implies(conj({px(x), px(y), mk_defined(sabs(x, y))}),
                                 px(sabs(x, y)))));
  WffPtr a5 = mk_forall(
      x, mk_forall(
             y, mk_forall(z, mk_implies(conj({px(x), px(y), px(z),
                                              mk_defined(scond(x, y, z))}),
                                        px(scond(x, y, z))))));
  WffPtr a6 = mk_forall(x, mk_implies(px(x), px(squot(x))));
  WffPtr a7 = mk_forall(
      x, mk_forall(y, mk_implies(conj({px(x), px(y), mk_defined(seval(x, y))}),
                                 px(seval(x, y)))));
  return mk_implies(conj({a1, a2, a3, a4, a5, a6, a7}), mk_forall(x, px(x)));
}

WffPtr instantiate(const Signature& sig, const std::string& id,
                   const AxiomParams& ps) {
  Ax ax{sig, ps};
  WffPtr r;
  if (id == "1") {
    WffPtr G = ax.w("G"), x = ax.v("x");
    ax.fresh_for(x, G);
    r = mk_eq(mk_and(mk_app(G, mk_true()), mk_app(G, mk_false())),
              mk_forall(x, mk_app(G, x)));
  } else if (id == "2") {
    WffPtr A = ax.w("A"), B = ax.w("B"), H = ax.w("H");
    r = mk_implies(mk_eq(A, B), mk_eq(mk_app(H, A), mk_app(H, B)));
  } else if (id == "3") {
    WffPtr F = ax.w("F"), G = ax.w("G"), x = ax.v("x");
    ax.fresh_for(x, F);
    ax.fresh_for(x, G);
    r = mk_implies(mk_and(mk_defined(F), mk_defined(G)),
                   mk_eq(mk_eq(F, G),
                         mk_forall(x, mk_quasi(mk_app(F, x), mk_app(G, x)))));
  } else if (id == "4.1") {
    WffPtr A = ax.w("A"), x = ax.v("x"), B = ax.w("B"), C = ax.w("C");
    r = mk_implies(
        mk_and(mk_defined(A),
               mk_eq(ssub(mk_quote(A), mk_quote(x), mk_quote(B)), mk_quote(C))),
        mk_quasi(mk_app(mk_abs(x, B), A), C));
  } else if (id == "4.2") {
    WffPtr x = ax.v("x"), A = ax.w("A");
    r = mk_quasi(mk_app(mk_abs(x, x), A), A);
  } else if (id == "4.3") {
    WffPtr x = ax.v("x"), y = ax.v("y"), A = ax.w("A");
    ax.distinct_vars(x, y);
    r = mk_implies(mk_defined(A), mk_quasi(mk_app(mk_abs(x, y), A), y));
  } else if (id == "4.4") {
    WffPtr x = ax.v("x"), c = ax.prim("c"), A = ax.w("A");
    r = mk_implies(mk_defined(A), mk_quasi(mk_app(mk_abs(x, c), A), c));
  } else if (id == "4.5") {
    WffPtr x = ax.v("x"), A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    r = mk_quasi(mk_app(mk_abs(x, mk_app(B, C)), A),
                 mk_app(mk_app(mk_abs(x, B), A), mk_app(mk_abs(x, C), A)));
  } else if (id == "4.6") {
    WffPtr x = ax.v("x"), A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_defined(A),
                   mk_eq(mk_app(mk_abs(x, mk_abs(x, B)), A), mk_abs(x, B)));
  } else if (id == "4.7") {
    WffPtr x = ax.v("x"), y = ax.v("y"), A = ax.w("A"), B = ax.w("B");
    ax.distinct_vars(x, y);
    r = mk_implies(
        mk_and(mk_defined(A), mk_or(snfi(mk_quote(x), mk_quote(B)),
                                    snfi(mk_quote(y), mk_quote(A)))),
        mk_eq(mk_app(mk_abs(x, mk_abs(y, B)), A),
              mk_abs(y, mk_app(mk_abs(x, B), A))));
  } else if (id == "4.8") {
    WffPtr x = ax.v("x"), A = ax.w("A"), B = ax.w("B"), C = ax.w("C"),
           D = ax.w("D");
    r = mk_quasi(mk_app(mk_abs(x, mk_cond(B, C, D)), A),
                 mk_cond(mk_app(mk_abs(x, B), A), mk_app(mk_abs(x, C), A),
                         mk_app(mk_abs(x, D), A)));
  } else if (id == "4.9") {
    WffPtr x = ax.v("x"), A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_defined(A),
                   mk_quasi(mk_app(mk_abs(x, mk_quote(B)), A), mk_quote(B)));
  } else if (id == "4.10") {
    WffPtr x = ax.v("x"), B = ax.w("B");
    r = mk_quasi(mk_app(mk_abs(x, B), x), B);
  } else if (id == "5") {
    WffPtr A = ax.w("A");
    std::string err;
    auto t = taut_check(A, &err);
    if (!t) axfail("BadParam", err);
    if (!*t) axfail("NotTautologous", "stated formula is not tautologous");
    r = A;
  } else if (id == "6.1") {
    r = mk_defined(ax.v("x"));
  } else if (id == "6.2") {
    r = mk_defined(ax.prim("c"));
  } else if (id == "6.3") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr ta = ax.tyof(A, "A");
    if (ta->kind != TyKind::Fun || ta->a->kind != TyKind::Omicron)
      axfail("SideCondition", "function must yield type o");
    r = mk_defined(mk_app(A, B));
  } else if (id == "6.4") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr ta = ax.tyof(A, "A");
    if (ta->kind != TyKind::Fun) axfail("BadParam", "A must have function type");
    r = mk_implies(mk_or(mk_undefined(A), mk_undefined(B)),
                   mk_quasi(mk_app(A, B), mk_bottom(ta->a)));
  } else if (id == "6.5") {
    WffPtr x = ax.v("x"), B = ax.w("B");
    r = mk_defined(mk_abs(x, B));
  } else if (id == "6.6") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    if (ax.tyof(B, "B")->kind != TyKind::Omicron)
      axfail("SideCondition", "branches must have type o");
    r = mk_defined(mk_cond(A, B, C));
  } else if (id == "6.7") {
    r = mk_defined(mk_quote(ax.w("A")));
  } else if (id == "6.8") {
    r = mk_defined(mk_eval(ax.w("A"), ty_o()));
  } else if (id == "6.9") {
    r = mk_defined(mk_eval(mk_quote(mk_quote(ax.w("A"))), ty_eps()));
  } else if (id == "6.10") {
    WffPtr A = ax.w("A");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(mk_not(sefp(alpha, A)),
                   mk_quasi(mk_eval(A, alpha), mk_bottom(alpha)));
  } else if (id == "6.11") {
    TypePtr alpha = ax.t("alpha");
    ax.distinct_types(alpha, ty_o());
    r = mk_undefined(mk_bottom(alpha));
  } else if (id == "7") {
    WffPtr A = ax.w("A");
    r = mk_quasi(A, A);
  } else if (id == "8.1") {
    WffPtr x = ax.v("x"), A = ax.w("A");
    ax.distinct_types(x->ty, ty_o());
    r = mk_eq(mk_exists1(x, A), mk_defined(mk_desc(x, A)));
  } else if (id == "8.2") {
    WffPtr x = ax.v("x"), A = ax.w("A"), B = ax.w("B");
    ax.distinct_types(x->ty, ty_o());
    WffPtr d = mk_desc(x, A);
    r = mk_implies(
        mk_and(mk_exists1(x, A),
               mk_eq(ssub(mk_quote(d), mk_quote(x), mk_quote(A)), mk_quote(B))),
        B);
  } else if (id == "9.1") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C"), D = ax.w("D");
    TypePtr a_ = ax.tyof(A, "A"), b_ = ax.tyof(B, "B");
    r = mk_eq(mk_eq(mk_app(c_pair(a_, b_), A, B), mk_app(c_pair(a_, b_), C, D)),
              mk_and(mk_eq(A, C), mk_eq(B, D)));
  } else if (id == "9.2") {
    WffPtr A = ax.w("A"), x = ax.v("x"), y = ax.v("y");
    ax.distinct_vars(x, y);
    ax.fresh_for(x, A);
    ax.fresh_for(y, A);
    TypePtr ta = ax.tyof(A, "A");
    if (ta->kind != TyKind::Pair) axfail("BadParam", "A must have pair type");
    r = mk_implies(
        mk_defined(A),
        mk_exists(x, mk_exists(y, mk_eq(A, mk_app(c_pair(x->ty, y->ty), x, y)))));
  } else if (id == "10.1") {
    WffPtr B = ax.w("B"), C = ax.w("C");
    r = mk_quasi(mk_cond(mk_true(), B, C), B);
  } else if (id == "10.2") {
    WffPtr B = ax.w("B"), C = ax.w("C");
    r = mk_quasi(mk_cond(mk_false(), B, C), C);
  } else if (id == "10.3") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    TypePtr alpha = ax.t("alpha");
    r = mk_quasi(mk_eval(mk_cond(A, B, C), alpha),
                 mk_cond(A, mk_eval(B, alpha), mk_eval(C, alpha)));
  } else if (id == "11.1") {
    WffPtr x = ax.v("x");
    r = mk_eq(mk_eval(mk_quote(x), x->ty), x);
  } else if (id == "11.2") {
    WffPtr c = ax.prim("c");
    r = mk_eq(mk_eval(mk_quote(c), c->ty), c);
  } else if (id == "11.3") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr alpha = ax.t("alpha"), beta = ax.t("beta");
    r = mk_implies(swff(ty_fun(alpha, beta), A),
                   mk_quasi(mk_eval(sapp(A, B), alpha),
                            mk_app(mk_eval(A, ty_fun(alpha, beta)),
                                   mk_eval(B, beta))));
  } else if (id == "11.4") {
    WffPtr x = ax.v("x"), B = ax.w("B");
    TypePtr beta = ax.t("beta");
    r = mk_implies(snfi(mk_quote(x), mk_quote(B)),
                   mk_quasi(mk_eval(sabs(mk_quote(x), B), ty_fun(beta, x->ty)),
                            mk_abs(x, mk_eval(B, beta))));
  } else if (id == "11.5") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    TypePtr alpha = ax.t("alpha");
    r = mk_quasi(mk_eval(scond(A, B, C), alpha),
                 mk_cond(mk_eval(A, ty_o()), mk_eval(B, alpha),
                         mk_eval(C, alpha)));
  } else if (id == "11.6") {
    WffPtr A = ax.w("A");
    r = mk_implies(mk_defined(mk_eval(squot(A), ty_eps())),
                   mk_eq(mk_eval(squot(A), ty_eps()), A));
  } else if (id == "12.1") {
    WffPtr A = ax.w("A");
    r = mk_eq(mk_quote(A), encode(A));
  } else if (id == "12.2.1") {
    r = svar(mk_quote(ax.v("x")));
  } else if (id == "12.2.2") {
    WffPtr A = ax.w("A");
    if (A->kind == WKind::Var)
      axfail("SideCondition", "parameter A must not be a variable");
    r = mk_not(svar(mk_quote(A)));
  } else if (id == "12.3.1") {
    r = scon(mk_quote(ax.prim("c")));
  } else if (id == "12.3.2") {
    WffPtr A = ax.w("A");
    if (A->kind == WKind::Const && is_primitive_const(sig, A))
      axfail("SideCondition", "parameter A must not be a primitive constant");
    r = mk_not(scon(mk_quote(A)));
  } else if (id == "12.4.1") {
    WffPtr A = ax.w("A");
    r = mk_not(mk_and(svar(A), scon(A)));
  } else if (id == "12.4.2" || id == "12.4.7") {
    WffPtr A = ax.w("A"), D = ax.w("D"), E = ax.w("E");
    WffPtr h = id == "12.4.2" ? svar(A) : scon(A);
    r = mk_not(mk_and(h, mk_eq(A, sapp(D, E))));
  } else if (id == "12.4.3" || id == "12.4.8") {
    WffPtr A = ax.w("A"), D = ax.w("D"), E = ax.w("E");
    WffPtr h = id == "12.4.3" ? svar(A) : scon(A);
    r = mk_not(mk_and(h, mk_eq(A, sabs(D, E))));
  } else if (id == "12.4.4" || id == "12.4.9") {
    WffPtr A = ax.w("A"), D = ax.w("D"), E = ax.w("E"), F = ax.w("F");
    WffPtr h = id == "12.4.4" ? svar(A) : scon(A);
    r = mk_not(mk_and(h, mk_eq(A, scond(D, E, F))));
  } else if (id == "12.4.5" || id == "12.4.10") {
    WffPtr A = ax.w("A"), D = ax.w("D");
    WffPtr h = id == "12.4.5" ? svar(A) : scon(A);
    r = mk_not(mk_and(h, mk_eq(A, squot(D))));
  } else if (id == "12.4.6" || id == "12.4.11") {
    WffPtr A = ax.w("A"), D = ax.w("D"), E = ax.w("E");
    WffPtr h = id == "12.4.6" ? svar(A) : scon(A);
    r = mk_not(mk_and(h, mk_eq(A, seval(D, E))));
  } else if (id == "12.4.12") {
    r = mk_neq(sapp(ax.w("A"), ax.w("B")), sabs(ax.w("D"), ax.w("E")));
  } else if (id == "12.4.13") {
    r = mk_neq(sapp(ax.w("A"), ax.w("B")),
               scond(ax.w("D"), ax.w("E"), ax.w("F")));
  } else if (id == "12.4.14") {
    r = mk_neq(sapp(ax.w("A"), ax.w("B")), squot(ax.w("D")));
  } else if (id == "12.4.15") {
    r = mk_neq(sapp(ax.w("A"), ax.w("B")), seval(ax.w("D"), ax.w("E")));
  } else if (id == "12.4.16") {
    r = mk_neq(sabs(ax.w("A"), ax.w("B")),
               scond(ax.w("D"), ax.w("E"), ax.w("F")));
  } else if (id == "12.4.17") {
    r = mk_neq(sabs(ax.w("A"), ax.w("B")), squot(ax.w("D")));
  } else if (id == "12.4.18") {
    r = mk_neq(sabs(ax.w("A"), ax.w("B")), seval(ax.w("D"), ax.w("E")));
  } else if (id == "12.4.19") {
    r = mk_neq(scond(ax.w("A"), ax.w("B"), ax.w("C")), squot(ax.w("D")));
  } else if (id == "12.4.20") {
    r = mk_neq(scond(ax.w("A"), ax.w("B"), ax.w("C")),
               seval(ax.w("D"), ax.w("E")));
  } else if (id == "12.4.21") {
    r = mk_neq(squot(ax.w("A")), seval(ax.w("D"), ax.w("E")));
  } else if (id == "12.4.22") {
    WffPtr x = ax.v("x"), y = ax.v("y");
    ax.distinct_vars(x, y);
    r = mk_neq(mk_quote(x), mk_quote(y));
  } else if (id == "12.4.23") {
    WffPtr c = ax.prim("c"), d = ax.prim("d");
    if (wff_eq(c, d)) axfail("SideCondition", "constants must be distinct");
    r = mk_neq(mk_quote(c), mk_quote(d));
  } else if (id == "12.4.24") {
    WffPtr A = ax.w("A"), B = ax.w("B"), D = ax.w("D"), E = ax.w("E");
    r = mk_implies(mk_eq(sapp(A, B), sapp(D, E)),
                   mk_and(mk_eq(A, D), mk_eq(B, E)));
  } else if (id == "12.4.25") {
    WffPtr A = ax.w("A"), B = ax.w("B"), D = ax.w("D"), E = ax.w("E");
    r = mk_implies(mk_eq(sabs(A, B), sabs(D, E)),
                   mk_and(mk_eq(A, D), mk_eq(B, E)));
  } else if (id == "12.4.26") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C"), D = ax.w("D"),
           E = ax.w("E"), F = ax.w("F");
    r = mk_implies(mk_eq(scond(A, B, C), scond(D, E, F)),
                   conj({mk_eq(A, D), mk_eq(B, E), mk_eq(C, F)}));
  } else if (id == "12.4.27") {
    WffPtr A = ax.w("A"), D = ax.w("D");
    r = mk_implies(mk_eq(squot(A), squot(D)), mk_eq(A, D));
  } else if (id == "12.4.28") {
    WffPtr A = ax.w("A"), B = ax.w("B"), D = ax.w("D"), E = ax.w("E");
    r = mk_implies(mk_eq(seval(A, B), seval(D, E)),
                   mk_and(mk_eq(A, D), mk_eq(B, E)));
  } else if (id == "12.4.29") {
    r = build_induction();
  } else if (id == "12.5.1") {
    WffPtr A = ax.w("A");
    r = mk_implies(svar(A), sef(A));
  } else if (id == "12.5.2") {
    WffPtr A = ax.w("A");
    r = mk_implies(scon(A), sef(A));
  } else if (id == "12.5.3") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_defined(sapp(A, B)),
                   mk_eq(sef(sapp(A, B)), mk_and(sef(A), sef(B))));
  } else if (id == "12.5.4") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_defined(sabs(A, B)), mk_eq(sef(sabs(A, B)), sef(B)));
  } else if (id == "12.5.5") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    r = mk_implies(mk_defined(scond(A, B, C)),
                   mk_eq(sef(scond(A, B, C)), conj({sef(A), sef(B), sef(C)})));
  } else if (id == "12.5.6") {
    WffPtr A = ax.w("A");
    r = mk_implies(mk_defined(A), sef(squot(A)));
  } else if (id == "12.5.7") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_not(sef(seval(A, B)));
  } else if (id == "12.6.1") {
    WffPtr x = ax.v("x");
    r = swff(x->ty, mk_quote(x));
  } else if (id == "12.6.2") {
    WffPtr c = ax.prim("c");
    r = swff(c->ty, mk_quote(c));
  } else if (id == "12.6.3") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr alpha = ax.t("alpha"), beta = ax.t("beta");
    r = mk_implies(mk_and(swff(ty_fun(alpha, beta), A), swff(beta, B)),
                   swff(alpha, sapp(A, B)));
  } else if (id == "12.6.4") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr alpha = ax.t("alpha"), beta = ax.t("beta");
    r = mk_implies(disj({swff(ty_i(), A), swff(ty_o(), A), swff(ty_eps(), A),
                         swff(ty_pair(alpha, beta), A)}),
                   mk_undefined(sapp(A, B)));
  } else if (id == "12.6.5") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr alpha = ax.t("alpha"), beta = ax.t("beta");
    r = mk_implies(mk_and(swff(ty_fun(alpha, beta), A), mk_not(swff(beta, B))),
                   mk_undefined(sapp(A, B)));
  } else if (id == "12.6.6") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr alpha = ax.t("alpha"), beta = ax.t("beta");
    r = mk_implies(mk_and(svarp(alpha, A), swff(beta, B)),
                   swff(ty_fun(beta, alpha), sabs(A, B)));
  } else if (id == "12.6.7") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_not(svar(A)), mk_undefined(sabs(A, B)));
  } else if (id == "12.6.8") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(conj({swff(ty_o(), A), swff(alpha, B), swff(alpha, C)}),
                   swff(alpha, scond(A, B, C)));
  } else if (id == "12.6.9") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    TypePtr alpha = ax.t("alpha"), beta = ax.t("beta");
    ax.distinct_types(alpha, beta);
    r = mk_implies(mk_or(mk_not(swff(ty_o(), A)),
                         mk_and(swff(alpha, B), swff(beta, C))),
                   mk_undefined(scond(A, B, C)));
  } else if (id == "12.6.10") {
    WffPtr A = ax.w("A");
    r = mk_implies(mk_defined(A), swff(ty_eps(), squot(A)));
  } else if (id == "12.6.11") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(mk_and(swff(ty_eps(), A), svarp(alpha, B)),
                   swff(alpha, seval(A, B)));
  } else if (id == "12.6.12") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_or(mk_not(swff(ty_eps(), A)), mk_not(svar(B))),
                   mk_undefined(seval(A, B)));
  } else if (id == "12.6.13") {
    WffPtr A = ax.w("A");
    TypePtr alpha = ax.t("alpha"), beta = ax.t("beta");
    ax.distinct_types(alpha, beta);
    r = mk_not(mk_and(swff(alpha, A), swff(beta, A)));
  } else if (id == "12.7.1") {
    WffPtr A = ax.w("A");
    r = mk_implies(svar(A), mk_not(snfi(A, A)));
  } else if (id == "12.7.2") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(conj({svar(A), svar(B), mk_neq(A, B)}), snfi(A, B));
  } else if (id == "12.7.3") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_and(svar(A), scon(B)), snfi(A, B));
  } else if (id == "12.7.4") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    r = mk_implies(mk_and(svar(A), mk_defined(sapp(B, C))),
                   mk_eq(snfi(A, sapp(B, C)),
                         mk_and(snfi(A, B), snfi(A, C))));
  } else if (id == "12.7.5") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_and(svar(A), mk_defined(sabs(A, B))),
                   snfi(A, sabs(A, B)));
  } else if (id == "12.7.6") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    r = mk_implies(
        conj({svar(A), svar(B), mk_neq(A, B), mk_defined(sabs(B, C))}),
        mk_eq(snfi(A, sabs(B, C)), snfi(A, C)));
  } else if (id == "12.7.7") {
    WffPtr A = ax.w("A"), D = ax.w("D"), E = ax.w("E"), F = ax.w("F");
    r = mk_implies(mk_and(svar(A), mk_defined(scond(D, E, F))),
                   mk_eq(snfi(A, scond(D, E, F)),
                         conj({snfi(A, D), snfi(A, E), snfi(A, F)})));
  } else if (id == "12.7.8") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_and(svar(A), mk_defined(B)), snfi(A, squot(B)));
  } else if (id == "12.7.9") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    TypePtr alpha = ax.t("alpha");
    WffPtr evB = mk_eval(B, ty_eps());
    r = mk_implies(
        conj({svar(A), svarp(alpha, C), mk_defined(seval(B, C))}),
        mk_eq(snfi(A, seval(B, C)),
              conj({ssc(B), sefp(ty_eps(), B), sefp(alpha, evB),
                    snfi(A, evB)})));
  } else if (id == "12.7.10") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_not(svar(A)), snfi(A, B));
  } else if (id == "12.8.1") {
    WffPtr A = ax.w("A");
    r = mk_implies(svar(A), mk_eq(scl(A), A));
  } else if (id == "12.8.2") {
    WffPtr A = ax.w("A");
    r = mk_implies(scon(A), mk_eq(scl(A), A));
  } else if (id == "12.8.3") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_defined(sapp(A, B)),
                   mk_quasi(scl(sapp(A, B)), sapp(scl(A), scl(B))));
  } else if (id == "12.8.4") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    r = mk_implies(mk_defined(sabs(A, B)),
                   mk_quasi(scl(sabs(A, B)), sabs(A, scl(B))));
  } else if (id == "12.8.5") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    r = mk_implies(mk_defined(scond(A, B, C)),
                   mk_quasi(scl(scond(A, B, C)),
                            scond(scl(A), scl(B), scl(C))));
  } else if (id == "12.8.6") {
    WffPtr A = ax.w("A");
    r = mk_quasi(scl(squot(A)), squot(A));
  } else if (id == "12.8.7") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr alpha = ax.t("alpha");
    WffPtr E0 = scl(A);
    WffPtr evE = mk_eval(E0, ty_eps());
    r = mk_implies(mk_and(svarp(alpha, B), mk_defined(seval(A, B))),
                   mk_quasi(scl(seval(A, B)),
                            mk_cond(mk_and(ssc(E0), sefp(alpha, evE)), evE,
                                    mk_bottom(ty_eps()))));
  } else if (id == "12.9.1") {
    WffPtr A = ax.w("A"), B = ax.w("B");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(mk_and(swff(alpha, A), svarp(alpha, B)),
                   mk_eq(ssub(A, B, B), scl(A)));
  } else if (id == "12.9.2") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(
        conj({swff(alpha, A), svarp(alpha, B), svar(C), mk_neq(B, C)}),
        mk_eq(ssub(A, B, C), C));
  } else if (id == "12.9.3") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(conj({swff(alpha, A), svarp(alpha, B), scon(C)}),
                   mk_eq(ssub(A, B, C), C));
  } else if (id == "12.9.4") {
    WffPtr A = ax.w("A"), B = ax.w("B"), D = ax.w("D"), E = ax.w("E");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(
        conj({swff(alpha, A), svarp(alpha, B), mk_defined(sapp(D, E))}),
        mk_quasi(ssub(A, B, sapp(D, E)),
                 sapp(ssub(A, B, D), ssub(A, B, E))));
  } else if (id == "12.9.5") {
    // conclusion cleanses the abstraction body
    WffPtr A = ax.w("A"), B = ax.w("B"), E = ax.w("E");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(
        conj({swff(alpha, A), svarp(alpha, B), mk_defined(sabs(B, E))}),
        mk_quasi(ssub(A, B, sabs(B, E)), sabs(B, scl(E))));
  } else if (id == "12.9.6") {
    WffPtr A = ax.w("A"), B = ax.w("B"), D = ax.w("D"), E = ax.w("E");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(
        conj({swff(alpha, A), svarp(alpha, B), svar(D), mk_neq(B, D),
              mk_defined(sabs(D, E))}),
        mk_quasi(ssub(A, B, sabs(D, E)),
                 mk_cond(mk_or(snfi(B, E), snfi(D, A)),
                         sabs(D, ssub(A, B, E)), mk_bottom(ty_eps()))));
  } else if (id == "12.9.7") {
    WffPtr A = ax.w("A"), B = ax.w("B"), D = ax.w("D"), E = ax.w("E"),
           F = ax.w("F");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(
        conj({swff(alpha, A), svarp(alpha, B), mk_defined(scond(D, E, F))}),
        mk_quasi(ssub(A, B, scond(D, E, F)),
                 scond(ssub(A, B, D), ssub(A, B, E), ssub(A, B, F))));
  } else if (id == "12.9.8") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(conj({swff(alpha, A), svarp(alpha, B), mk_defined(C)}),
                   mk_eq(ssub(A, B, squot(C)), squot(C)));
  } else if (id == "12.9.9") {
    WffPtr A = ax.w("A"), B = ax.w("B"), D = ax.w("D"), E = ax.w("E");
    TypePtr alpha = ax.t("alpha"), beta = ax.t("beta");
    WffPtr E1 = ssub(A, B, D);
    WffPtr evE1 = mk_eval(E1, ty_eps());
    WffPtr E2 = ssub(A, B, evE1);
    r = mk_implies(
        conj({swff(alpha, A), svarp(alpha, B), svarp(beta, E),
              mk_defined(seval(D, E))}),
        mk_quasi(ssub(A, B, seval(D, E)),
                 mk_cond(mk_and(ssc(E1), sefp(beta, evE1)), E2,
                         mk_bottom(ty_eps()))));
  } else if (id == "12.9.10") {
    WffPtr A = ax.w("A"), B = ax.w("B"), C = ax.w("C");
    TypePtr alpha = ax.t("alpha");
    r = mk_implies(mk_and(swff(alpha, A), mk_not(svarp(alpha, B))),
                   mk_undefined(ssub(A, B, C)));
  } else {
    axfail("UnknownSchema", "unknown axiom schema " + id);
  }
  auto t = type_of(r);
  if (!t || (*t)->kind != TyKind::Omicron)
    axfail("BadParam", "instance of schema " + id + " is not a formula");
  return r;
}

}  // namespace

std::optional<WffPtr> instantiate_axiom(const Signature& sig,
                                        const std::string& id,
                                        const AxiomParams& params,
                                        KernelError* err) {
  try {
    return instantiate(sig, id, params);
  } catch (const AxErr& e) {
    if (err) *err = e.e;
    return std::nullopt;
  }
}

// ---------- rules ----------

namespace {
std::optional<Bin> match_eq_or_quasi(const WffPtr& w, bool* iseq) {
  if (auto q = match_quasi(w)) {
    if (iseq) *iseq = false;
    return q;
  }
  if (auto e = match_eq(w)) {
    if (iseq) *iseq = true;
    return e;
  }
  return std::nullopt;
}
}  // namespace

std::optional<WffPtr> apply_rule1(const WffPtr& premise, const WffPtr& target,
                                  const Path& path, KernelError* err) {
  auto fail = [&](std::string cls, std::string msg) -> std::optional<WffPtr> {
    if (err) *err = {std::move(cls), std::move(msg)};
    return std::nullopt;
  };
  auto m = match_eq_or_quasi(premise, nullptr);
  if (!m) return fail("NotAnEquation", "premise is not an equation or quasi-equation");
  for (Sel s : path) {
    if (s == Sel::Binder)
      return fail("IllegalPath", "replacement inside an abstraction binder");
    if (s == Sel::QBody)
      return fail("IllegalPath", "replacement inside a quotation");
  }
  auto sub = subterm_at(target, path);
  if (!sub) return fail("NoSuchSubterm", "no subterm at " + path_str(path));
  WffPtr repl;
  if (wff_eq(*sub, m->a))
    repl = m->b;
  else if (wff_eq(*sub, m->b))
    repl = m->a;
  else
    return fail("PremiseMismatch",
                "subterm at " + path_str(path) + " matches neither side");
  auto r = replace_at(target, path, repl);
  if (!r) return fail("NoSuchSubterm", "no subterm at " + path_str(path));
  return r;
}

std::optional<WffPtr> apply_rule2(const WffPtr& implication,
                                  const WffPtr& antecedent, KernelError* err) {
  auto m = match_implies(implication);
  if (!m) {
    if (err) *err = {"NotAnImplication", "major premise is not an implication"};
    return std::nullopt;
  }
  if (!wff_eq(m->a, antecedent)) {
    if (err) *err = {"PremiseMismatch", "antecedent does not match"};
    return std::nullopt;
  }
  return m->b;
}

// ---------- builder ----------

int ProofBuilder::given(const WffPtr& w) {
  lines_.push_back(w);
  return size() - 1;
}

int ProofBuilder::axiom(const std::string& id, const AxiomParams& ps) {
  KernelError e;
  auto r = instantiate_axiom(sig_, id, ps, &e);
  if (!r) throw MacroError{e};
  lines_.push_back(*r);
  return size() - 1;
}

int ProofBuilder::taut(const WffPtr& goal) {
  auto t = type_of(goal);
  if (!t || (*t)->kind != TyKind::Omicron)
    mfail("BadParam", "tautology goal is not a formula");
  std::string err;
  auto r = taut_check(goal, &err);
  if (!r) mfail("BadParam", err);
  if (!*r) mfail("NotTautologous", "formula is not tautologous");
  lines_.push_back(goal);
  return size() - 1;
}

int ProofBuilder::mp(int implication, int antecedent) {
  KernelError e;
  auto r = apply_rule2(at(implication), at(antecedent), &e);
  if (!r) throw MacroError{e};
  lines_.push_back(*r);
  return size() - 1;
}

int ProofBuilder::rule1(int premise, int target, const Path& path) {
  KernelError e;
  auto r = apply_rule1(at(premise), at(target), path, &e);
  if (!r) throw MacroError{e};
  lines_.push_back(*r);
  return size() - 1;
}

// ---------- elaboration helpers ----------

namespace {

Path cat(const Path& a, const Path& b) {
  Path r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

const std::vector<Path>& quasi_r_paths() {
  static const std::vector<Path> p = {
      {Sel::Fn, Sel::Arg, Sel::Arg, Sel::Fn, Sel::Arg},
      {Sel::Fn, Sel::Arg, Sel::Arg, Sel::Arg},
      {Sel::Arg, Sel::Arg}};
  return p;
}

// Rewrites the occurrence at position `sub` inside every right-hand-side slot
// of an equation or quasi-equation line.
int rewrite_rhs(ProofBuilder& b, int prem, int line, const Path& sub) {
  bool iseq = false;
  auto m = match_eq_or_quasi(b.at(line), &iseq);
  if (!m) mfail("MacroFailure", "expected an equation line");
  if (iseq) return b.rule1(prem, line, cat({Sel::Arg}, sub));
  int cur = line;
  for (const auto& p : quasi_r_paths()) cur = b.rule1(prem, cur, cat(p, sub));
  return cur;
}

int upgrade_to_eq(ProofBuilder& b, int line, int defLine) {
  WffPtr q = b.at(line);
  if (match_eq(q)) return line;
  auto m = match_quasi(q);
  if (!m) mfail("MacroFailure", "expected an equation or quasi-equation");
  WffPtr d = b.at(defLine);
  int t = b.taut(mk_implies(q, mk_implies(d, mk_eq(m->a, m->b))));
  return b.mp(b.mp(t, line), defLine);
}

int eq_true(ProofBuilder& b, int line) {
  WffPtr p = b.at(line);
  int t = b.taut(mk_implies(p, mk_eq(p, mk_true())));
  return b.mp(t, line);
}

int iff_elim(ProofBuilder& b, int iff, int known) {
  auto m = match_eq(b.at(iff));
  if (!m) mfail("MacroFailure", "expected a biconditional line");
  WffPtr k = b.at(known);
  if (wff_eq(k, m->a)) {
    int t = b.taut(mk_implies(b.at(iff), mk_implies(m->a, m->b)));
    return b.mp(b.mp(t, iff), known);
  }
  if (wff_eq(k, m->b)) {
    int t = b.taut(mk_implies(b.at(iff), mk_implies(m->b, m->a)));
    return b.mp(b.mp(t, iff), known);
  }
  mfail("MacroFailure", "known line matches neither side of the biconditional");
}

int or_intro(ProofBuilder& b, int line, const WffPtr& other, bool left) {
  WffPtr p = b.at(line);
  WffPtr goal = left ? mk_or(p, other) : mk_or(other, p);
  return b.mp(b.taut(mk_implies(p, goal)), line);
}

int derive_nfi_e(ProofBuilder& b, const WffPtr& v, const WffPtr& w);

}  // namespace

int prove_conj(ProofBuilder& b, const std::vector<int>& parts) {
  if (parts.empty()) mfail("MacroFailure", "empty conjunction");
  if (parts.size() == 1) return parts[0];
  WffPtr goal = b.at(parts.back());
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    goal = mk_and(b.at(parts[i]), goal);
  WffPtr chain = goal;
  for (std::size_t i = parts.size(); i-- > 0;)
    chain = mk_implies(b.at(parts[i]), chain);
  int cur = b.taut(chain);
  for (int p : parts) cur = b.mp(cur, p);
  return cur;
}

int prove_lit_defined(ProofBuilder& b, const WffPtr& represented) {
  WffPtr ew = encode(represented);
  int l1 = b.axiom("6.7", {{"A", represented}});
  if (wff_eq(ew, mk_quote(represented))) return l1;
  int l2 = b.axiom("12.1", {{"A", represented}});
  int l3 = b.rule1(l2, l1, Path{Sel::Fn, Sel::Arg});
  return b.rule1(l2, l3, Path{Sel::Arg});
}

int prove_defined(ProofBuilder& b, const WffPtr& w) {
  auto t = type_of(w);
  if (!t) mfail("MacroFailure", "ill-formed wff");
  switch (w->kind) {
    case WKind::Var:
      return b.axiom("6.1", {{"x", w}});
    case WKind::Const:
      return b.axiom("6.2", {{"c", w}});
    case WKind::Abs:
      return b.axiom("6.5", {{"x", w->a}, {"B", w->b}});
    case WKind::Quote:
      return b.axiom("6.7", {{"A", w->a}});
    case WKind::App: {
      auto ft = type_of(w->a);
      if (ft && (*ft)->kind == TyKind::Fun &&
          (*ft)->a->kind == TyKind::Omicron)
        return b.axiom("6.3", {{"A", w->a}, {"B", w->b}});
      break;
    }
    case WKind::Cond:
      if ((*t)->kind == TyKind::Omicron)
        return b.axiom("6.6", {{"A", w->a}, {"B", w->b}, {"C", w->c}});
      break;
    case WKind::Eval:
      if (w->ty->kind == TyKind::Omicron) return b.axiom("6.8", {{"A", w->a}});
      if (w->ty->kind == TyKind::Epsilon && w->a->kind == WKind::Quote &&
          w->a->a->kind == WKind::Quote)
        return b.axiom("6.9", {{"A", w->a->a->a}});
      break;
  }
  if ((*t)->kind == TyKind::Epsilon) {
    if (auto d = decode(w)) return prove_lit_defined(b, *d);
  }
  mfail("MacroFailure", "cannot derive definedness of " + print_wff(w));
}

BetaResult derive_beta(ProofBuilder& b, const WffPtr& x, const WffPtr& body,
                       const WffPtr& arg, int arg_defined) {
  if (x->kind != WKind::Var) mfail("MacroFailure", "binder must be a variable");
  AxiomParams base{{"x", AxiomParam(x)}, {"A", AxiomParam(arg)}};
  if (wff_eq(body, x)) return {b.axiom("4.2", base), arg, false};
  switch (body->kind) {
    case WKind::Var: {
      base["y"] = body;
      return {b.mp(b.axiom("4.3", base), arg_defined), body, false};
    }
    case WKind::Const: {
      base["c"] = body;
      return {b.mp(b.axiom("4.4", base), arg_defined), body, false};
    }
    case WKind::Quote: {
      base["B"] = body->a;
      return {b.mp(b.axiom("4.9", base), arg_defined), body, false};
    }
    case WKind::App: {
      base["B"] = body->a;
      base["C"] = body->b;
      int l = b.axiom("4.5", base);
      auto rf = derive_beta(b, x, body->a, arg, arg_defined);
      l = rewrite_rhs(b, rf.line, l, {Sel::Fn});
      auto ra = derive_beta(b, x, body->b, arg, arg_defined);
      l = rewrite_rhs(b, ra.line, l, {Sel::Arg});
      return {l, mk_app(rf.value, ra.value), false};
    }
    case WKind::Cond: {
      base["B"] = body->a;
      base["C"] = body->b;
      base["D"] = body->c;
      int l = b.axiom("4.8", base);
      auto rt = derive_beta(b, x, body->a, arg, arg_defined);
      l = rewrite_rhs(b, rt.line, l, {Sel::Test});
      auto ru = derive_beta(b, x, body->b, arg, arg_defined);
      l = rewrite_rhs(b, ru.line, l, {Sel::Then});
      auto rv = derive_beta(b, x, body->c, arg, arg_defined);
      l = rewrite_rhs(b, rv.line, l, {Sel::Else});
      return {l, mk_cond(rt.value, ru.value, rv.value), false};
    }
    case WKind::Abs: {
      if (wff_eq(body->a, x)) {
        base["B"] = body->b;
        return {b.mp(b.axiom("4.6", base), arg_defined), body, true};
      }
      WffPtr y = body->a, inner = body->b;
      base["y"] = y;
      base["B"] = inner;
      int axl = b.axiom("4.7", base);
      WffPtr nfiX = snfi(mk_quote(x), mk_quote(inner));
      WffPtr nfiY = snfi(mk_quote(y), mk_quote(arg));
      int orline;
      if (not_free_in(b.sig(), x, inner) == Tri::True) {
        orline = or_intro(b, derive_nfi(b, x, inner, true), nfiY, true);
      } else if (not_free_in(b.sig(), y, arg) == Tri::True) {
        orline = or_intro(b, derive_nfi(b, y, arg, true), nfiX, false);
      } else {
        mfail("MacroFailure",
              "beta step would require renaming binder " + print_wff(y));
      }
      int l = b.mp(axl, prove_conj(b, {arg_defined, orline}));
      auto ri = derive_beta(b, x, inner, arg, arg_defined);
      l = b.rule1(ri.line, l, Path{Sel::Arg, Sel::Body});
      return {l, mk_abs(y, ri.value), true};
    }
    case WKind::Eval: {
      auto se = derive_sub_equation(b, arg, x, body);
      int sl = se.line;
      auto bridge = [&](const WffPtr& wrep, const Path& at) {
        if (wff_eq(encode(wrep), mk_quote(wrep))) return;
        int l12 = b.axiom("12.1", {{"A", wrep}});
        sl = b.rule1(l12, sl, at);
      };
      bridge(arg, {Sel::Fn, Sel::Arg, Sel::Fn, Sel::Fn, Sel::Arg});
      bridge(body, {Sel::Fn, Sel::Arg, Sel::Arg});
      bridge(se.value, {Sel::Arg});
      base["B"] = body;
      base["C"] = se.value;
      int l = b.mp(b.axiom("4.1", base), prove_conj(b, {arg_defined, sl}));
      return {l, se.value, false};
    }
  }
  mfail("MacroFailure", "unsupported beta redex");
}

int derive_nfi(ProofBuilder& b, const WffPtr& v, const WffPtr& w,
               bool quote_form) {
  int l = derive_nfi_e(b, v, w);
  if (quote_form && !wff_eq(encode(w), mk_quote(w))) {
    int l12 = b.axiom("12.1", {{"A", w}});
    l = b.rule1(l12, l, Path{Sel::Arg});
  }
  return l;
}

namespace {

int derive_nfi_e(ProofBuilder& b, const WffPtr& v, const WffPtr& w) {
  WffPtr qv = mk_quote(v);
  switch (w->kind) {
    case WKind::Var: {
      if (wff_eq(w, v))
        mfail("MacroFailure", print_wff(v) + " occurs free in the target");
      int axl = b.axiom("12.7.2", {{"A", qv}, {"B", mk_quote(w)}});
      int p1 = b.axiom("12.2.1", {{"x", v}});
      int p2 = b.axiom("12.2.1", {{"x", w}});
      int p3 = b.axiom("12.4.22", {{"x", v}, {"y", w}});
      return b.mp(axl, prove_conj(b, {p1, p2, p3}));
    }
    case WKind::Const: {
      int axl = b.axiom("12.7.3", {{"A", qv}, {"B", mk_quote(w)}});
      int p1 = b.axiom("12.2.1", {{"x", v}});
      int p2 = b.axiom("12.3.1", {{"c", w}});
      return b.mp(axl, prove_conj(b, {p1, p2}));
    }
    case WKind::App: {
      int axl = b.axiom("12.7.4",
                        {{"A", qv}, {"B", encode(w->a)}, {"C", encode(w->b)}});
      int p1 = b.axiom("12.2.1", {{"x", v}});
      int d = prove_lit_defined(b, w);
      int iff = b.mp(axl, prove_conj(b, {p1, d}));
      int r1 = derive_nfi_e(b, v, w->a);
      int r2 = derive_nfi_e(b, v, w->b);
      return iff_elim(b, iff, prove_conj(b, {r1, r2}));
    }
    case WKind::Abs: {
      if (wff_eq(w->a, v)) {
        int axl = b.axiom("12.7.5", {{"A", qv}, {"B", encode(w->b)}});
        int p1 = b.axiom("12.2.1", {{"x", v}});
        int d = prove_lit_defined(b, w);
        return b.mp(axl, prove_conj(b, {p1, d}));
      }
      int axl = b.axiom(
          "12.7.6", {{"A", qv}, {"B", mk_quote(w->a)}, {"C", encode(w->b)}});
      int p1 = b.axiom("12.2.1", {{"x", v}});
      int p2 = b.axiom("12.2.1", {{"x", w->a}});
      int p3 = b.axiom("12.4.22", {{"x", v}, {"y", w->a}});
      int d = prove_lit_defined(b, w);
      int iff = b.mp(axl, prove_conj(b, {p1, p2, p3, d}));
      return iff_elim(b, iff, derive_nfi_e(b, v, w->b));
    }
    case WKind::Cond: {
      int axl = b.axiom("12.7.7", {{"A", qv},
                                   {"D", encode(w->a)},
                                   {"E", encode(w->b)},
                                   {"F", encode(w->c)}});
      int p1 = b.axiom("12.2.1", {{"x", v}});
      int d = prove_lit_defined(b, w);
      int iff = b.mp(axl, prove_conj(b, {p1, d}));
      int r1 = derive_nfi_e(b, v, w->a);
      int r2 = derive_nfi_e(b, v, w->b);
      int r3 = derive_nfi_e(b, v, w->c);
      return iff_elim(b, iff, prove_conj(b, {r1, r2, r3}));
    }
    case WKind::Quote: {
      int axl = b.axiom("12.7.8", {{"A", qv}, {"B", encode(w->a)}});
      int p1 = b.axiom("12.2.1", {{"x", v}});
      int d = prove_lit_defined(b, w->a);
      return b.mp(axl, prove_conj(b, {p1, d}));
    }
    case WKind::Eval:
      mfail("MacroFailure", "non-freeness through an evaluation is not derivable");
  }
  mfail("MacroFailure", "unsupported target");
}

// Proves the predicate redex App(pred, arg) from a proof of its beta value.
int bridge_redex(ProofBuilder& b, const WffPtr& pred, const WffPtr& arg,
                 int valueLine, int argDef) {
  auto br = derive_beta(b, pred->a, pred->b, arg, argDef);
  if (!wff_eq(br.value, b.at(valueLine)))
    mfail("MacroFailure", "redex value mismatch");
  int eq = br.line;
  if (!br.is_eq) {
    int d = b.axiom("6.3", {{"A", pred}, {"B", arg}});
    eq = upgrade_to_eq(b, eq, d);
  }
  return b.rule1(eq, valueLine, Path{});
}

}  // namespace

int derive_varpred(ProofBuilder& b, const WffPtr& x) {
  if (x->kind != WKind::Var) mfail("MacroFailure", "expected a variable");
  int v1 = b.axiom("12.2.1", {{"x", x}});
  int v2 = b.axiom("12.6.1", {{"x", x}});
  int V = prove_conj(b, {v1, v2});
  int d = b.axiom("6.7", {{"A", x}});
  return bridge_redex(b, mk_varpred(x->ty), mk_quote(x), V, d);
}

int derive_wffpred(ProofBuilder& b, const WffPtr& w) {
  auto t = type_of(w);
  if (!t) mfail("MacroFailure", "ill-formed wff");
  switch (w->kind) {
    case WKind::Var:
      return b.axiom("12.6.1", {{"x", w}});
    case WKind::Const:
      return b.axiom("12.6.2", {{"c", w}});
    case WKind::App: {
      TypePtr ft = *type_of(w->a);
      int r1 = derive_wffpred(b, w->a);
      int r2 = derive_wffpred(b, w->b);
      int axl = b.axiom("12.6.3", {{"A", AxiomParam(encode(w->a))},
                                   {"B", AxiomParam(encode(w->b))},
                                   {"alpha", AxiomParam(ft->a)},
                                   {"beta", AxiomParam(ft->b)}});
      return b.mp(axl, prove_conj(b, {r1, r2}));
    }
    case WKind::Abs: {
      int p1 = derive_varpred(b, w->a);
      int p2 = derive_wffpred(b, w->b);
      int axl = b.axiom("12.6.6", {{"A", AxiomParam(mk_quote(w->a))},
                                   {"B", AxiomParam(encode(w->b))},
                                   {"alpha", AxiomParam(w->a->ty)},
                                   {"beta", AxiomParam(*type_of(w->b))}});
      return b.mp(axl, prove_conj(b, {p1, p2}));
    }
    case WKind::Cond: {
      int p1 = derive_wffpred(b, w->a);
      int p2 = derive_wffpred(b, w->b);
      int p3 = derive_wffpred(b, w->c);
      int axl = b.axiom("12.6.8", {{"A", AxiomParam(encode(w->a))},
                                   {"B", AxiomParam(encode(w->b))},
                                   {"C", AxiomParam(encode(w->c))},
                                   {"alpha", AxiomParam(*t)}});
      return b.mp(axl, prove_conj(b, {p1, p2, p3}));
    }
    case WKind::Quote: {
      int d = prove_lit_defined(b, w->a);
      return b.mp(b.axiom("12.6.10", {{"A", encode(w->a)}}), d);
    }
    case WKind::Eval: {
      WffPtr ew = encode(w);
      WffPtr carrier = ew->b;  // quotation of the type-carrier variable
      int p1 = derive_wffpred(b, w->a);
      int p2 = derive_varpred(b, carrier->a);
      int axl = b.axiom("12.6.11", {{"A", AxiomParam(encode(w->a))},
                                    {"B", AxiomParam(carrier)},
                                    {"alpha", AxiomParam(w->ty)}});
      return b.mp(axl, prove_conj(b, {p1, p2}));
    }
  }
  mfail("MacroFailure", "unsupported wff");
}

int derive_evalfree_lit(ProofBuilder& b, const WffPtr& w) {
  switch (w->kind) {
    case WKind::Var:
      return b.mp(b.axiom("12.5.1", {{"A", mk_quote(w)}}),
                  b.axiom("12.2.1", {{"x", w}}));
    case WKind::Const:
      return b.mp(b.axiom("12.5.2", {{"A", mk_quote(w)}}),
                  b.axiom("12.3.1", {{"c", w}}));
    case WKind::App: {
      int iff = b.mp(b.axiom("12.5.3", {{"A", AxiomParam(encode(w->a))},
                                        {"B", AxiomParam(encode(w->b))}}),
                     prove_lit_defined(b, w));
      int r1 = derive_evalfree_lit(b, w->a);
      int r2 = derive_evalfree_lit(b, w->b);
      return iff_elim(b, iff, prove_conj(b, {r1, r2}));
    }
    case WKind::Abs: {
      int iff = b.mp(b.axiom("12.5.4", {{"A", AxiomParam(mk_quote(w->a))},
                                        {"B", AxiomParam(encode(w->b))}}),
                     prove_lit_defined(b, w));
      return iff_elim(b, iff, derive_evalfree_lit(b, w->b));
    }
    case WKind::Cond: {
      int iff = b.mp(b.axiom("12.5.5", {{"A", AxiomParam(encode(w->a))},
                                        {"B", AxiomParam(encode(w->b))},
                                        {"C", AxiomParam(encode(w->c))}}),
                     prove_lit_defined(b, w));
      int r1 = derive_evalfree_lit(b, w->a);
      int r2 = derive_evalfree_lit(b, w->b);
      int r3 = derive_evalfree_lit(b, w->c);
      return iff_elim(b, iff, prove_conj(b, {r1, r2, r3}));
    }
    case WKind::Quote:
      return b.mp(b.axiom("12.5.6", {{"A", encode(w->a)}}),
                  prove_lit_defined(b, w->a));
    case WKind::Eval:
      mfail("MacroFailure", "wff is not evaluation-free");
  }
  mfail("MacroFailure", "unsupported wff");
}

int derive_efpred(ProofBuilder& b, const WffPtr& w) {
  auto t = type_of(w);
  if (!t) mfail("MacroFailure", "ill-formed wff");
  int e = derive_evalfree_lit(b, w);
  int wp = derive_wffpred(b, w);
  int V = prove_conj(b, {e, wp});
  int d = prove_lit_defined(b, w);
  return bridge_redex(b, mk_evalfreepred(*t), encode(w), V, d);
}

int derive_synclosed_quot(ProofBuilder& b, const WffPtr& quoted) {
  WffPtr e1 = squot(encode(quoted));
  WffPtr v1 = res_var(1, ty_eps());
  int d = prove_lit_defined(b, quoted);
  int axl = b.axiom("12.7.8", {{"A", v1}, {"B", encode(quoted)}});
  auto m = match_implies(b.at(axl));
  auto pm = match_and(m->a);
  int t = b.taut(mk_implies(b.at(axl),
                            mk_implies(pm->b, mk_implies(pm->a, m->b))));
  int impl = b.mp(b.mp(t, axl), d);
  int ug = derive_ugen(b, v1, impl);
  int dq = prove_lit_defined(b, mk_quote(quoted));
  return bridge_redex(b, mk_synclosed(), e1, ug, dq);
}

int derive_cleanse_id(ProofBuilder& b, const WffPtr& w) {
  switch (w->kind) {
    case WKind::Var:
      return b.mp(b.axiom("12.8.1", {{"A", mk_quote(w)}}),
                  b.axiom("12.2.1", {{"x", w}}));
    case WKind::Const:
      return b.mp(b.axiom("12.8.2", {{"A", mk_quote(w)}}),
                  b.axiom("12.3.1", {{"c", w}}));
    case WKind::App: {
      int d = prove_lit_defined(b, w);
      int l = b.mp(b.axiom("12.8.3", {{"A", AxiomParam(encode(w->a))},
                                      {"B", AxiomParam(encode(w->b))}}),
                   d);
      l = rewrite_rhs(b, derive_cleanse_id(b, w->a), l, {Sel::Fn, Sel::Arg});
      l = rewrite_rhs(b, derive_cleanse_id(b, w->b), l, {Sel::Arg});
      return upgrade_to_eq(b, l, d);
    }
    case WKind::Abs: {
      int d = prove_lit_defined(b, w);
      int l = b.mp(b.axiom("12.8.4", {{"A", AxiomParam(mk_quote(w->a))},
                                      {"B", AxiomParam(encode(w->b))}}),
                   d);
      l = rewrite_rhs(b, derive_cleanse_id(b, w->b), l, {Sel::Arg});
      return upgrade_to_eq(b, l, d);
    }
    case WKind::Cond: {
      int d = prove_lit_defined(b, w);
      int l = b.mp(b.axiom("12.8.5", {{"A", AxiomParam(encode(w->a))},
                                      {"B", AxiomParam(encode(w->b))},
                                      {"C", AxiomParam(encode(w->c))}}),
                   d);
      l = rewrite_rhs(b, derive_cleanse_id(b, w->a), l,
                      {Sel::Fn, Sel::Fn, Sel::Arg});
      l = rewrite_rhs(b, derive_cleanse_id(b, w->b), l, {Sel::Fn, Sel::Arg});
      l = rewrite_rhs(b, derive_cleanse_id(b, w->c), l, {Sel::Arg});
      return upgrade_to_eq(b, l, d);
    }
    case WKind::Quote: {
      int d = prove_lit_defined(b, w);
      int l = b.axiom("12.8.6", {{"A", encode(w->a)}});
      return upgrade_to_eq(b, l, d);
    }
    case WKind::Eval:
      mfail("MacroFailure", "cleanse identity requires an evaluation-free wff");
  }
  mfail("MacroFailure", "unsupported wff");
}

SubResult derive_sub_equation(ProofBuilder& b, const WffPtr& a, const WffPtr& x,
                              const WffPtr& bw) {
  if (x->kind != WKind::Var) mfail("MacroFailure", "expected a variable");
  auto er = subst(b.sig(), a, x, bw);
  if (er.tag != PartialResult::Defined)
    mfail("MacroFailure", "substitution result is not defined");
  WffPtr A = encode(a), B = mk_quote(x);
  TypePtr alpha = x->ty;
  int wA = derive_wffpred(b, a);
  int vB = derive_varpred(b, x);
  int line = -1;
  WffPtr value;
  if (wff_eq(bw, x)) {
    int axl = b.axiom(
        "12.9.1", {{"A", AxiomParam(A)}, {"B", AxiomParam(B)},
                   {"alpha", AxiomParam(alpha)}});
    line = b.mp(axl, prove_conj(b, {wA, vB}));
    int cl = derive_cleanse_id(b, a);
    line = b.rule1(cl, line, Path{Sel::Arg});
    value = a;
  } else {
    switch (bw->kind) {
      case WKind::Var: {
        int axl = b.axiom("12.9.2", {{"A", AxiomParam(A)},
                                     {"B", AxiomParam(B)},
                                     {"C", AxiomParam(mk_quote(bw))},
                                     {"alpha", AxiomParam(alpha)}});
        int p = b.axiom("12.2.1", {{"x", bw}});
        int n = b.axiom("12.4.22", {{"x", x}, {"y", bw}});
        line = b.mp(axl, prove_conj(b, {wA, vB, p, n}));
        value = bw;
        break;
      }
      case WKind::Const: {
        int axl = b.axiom("12.9.3", {{"A", AxiomParam(A)},
                                     {"B", AxiomParam(B)},
                                     {"C", AxiomParam(mk_quote(bw))},
                                     {"alpha", AxiomParam(alpha)}});
        int p = b.axiom("12.3.1", {{"c", bw}});
        line = b.mp(axl, prove_conj(b, {wA, vB, p}));
        value = bw;
        break;
      }
      case WKind::App: {
        int d = prove_lit_defined(b, bw);
        int axl = b.axiom("12.9.4", {{"A", AxiomParam(A)},
                                     {"B", AxiomParam(B)},
                                     {"D", AxiomParam(encode(bw->a))},
                                     {"E", AxiomParam(encode(bw->b))},
                                     {"alpha", AxiomParam(alpha)}});
        line = b.mp(axl, prove_conj(b, {wA, vB, d}));
        auto r1 = derive_sub_equation(b, a, x, bw->a);
        line = rewrite_rhs(b, r1.line, line, {Sel::Fn, Sel::Arg});
        auto r2 = derive_sub_equation(b, a, x, bw->b);
        line = rewrite_rhs(b, r2.line, line, {Sel::Arg});
        value = mk_app(r1.value, r2.value);
        line = upgrade_to_eq(b, line, prove_lit_defined(b, value));
        break;
      }
      case WKind::Abs: {
        int d = prove_lit_defined(b, bw);
        if (wff_eq(bw->a, x)) {
          int axl = b.axiom("12.9.5", {{"A", AxiomParam(A)},
                                       {"B", AxiomParam(B)},
                                       {"E", AxiomParam(encode(bw->b))},
                                       {"alpha", AxiomParam(alpha)}});
          line = b.mp(axl, prove_conj(b, {wA, vB, d}));
          line = rewrite_rhs(b, derive_cleanse_id(b, bw->b), line, {Sel::Arg});
          line = upgrade_to_eq(b, line, d);
          value = bw;
          break;
        }
        WffPtr D = mk_quote(bw->a), Ee = encode(bw->b);
        int axl = b.axiom("12.9.6", {{"A", AxiomParam(A)},
                                     {"B", AxiomParam(B)},
                                     {"D", AxiomParam(D)},
                                     {"E", AxiomParam(Ee)},
                                     {"alpha", AxiomParam(alpha)}});
        int p = b.axiom("12.2.1", {{"x", bw->a}});
        int n = b.axiom("12.4.22", {{"x", x}, {"y", bw->a}});
        line = b.mp(axl, prove_conj(b, {wA, vB, p, n, d}));
        WffPtr nfiBE = snfi(B, Ee), nfiDA = snfi(D, A);
        int orline;
        if (not_free_in(b.sig(), x, bw->b) == Tri::True) {
          orline = or_intro(b, derive_nfi(b, x, bw->b, false), nfiDA, true);
        } else if (not_free_in(b.sig(), bw->a, a) == Tri::True) {
          orline = or_intro(b, derive_nfi(b, bw->a, a, false), nfiBE, false);
        } else {
          mfail("MacroFailure", "substitution would require renaming");
        }
        line = rewrite_rhs(b, eq_true(b, orline), line, {Sel::Test});
        int a101 = b.axiom(
            "10.1", {{"B", AxiomParam(sabs(D, ssub(A, B, Ee)))},
                     {"C", AxiomParam(mk_bottom(ty_eps()))}});
        line = rewrite_rhs(b, a101, line, {});
        auto rb = derive_sub_equation(b, a, x, bw->b);
        line = rewrite_rhs(b, rb.line, line, {Sel::Arg});
        value = mk_abs(bw->a, rb.value);
        line = upgrade_to_eq(b, line, prove_lit_defined(b, value));
        break;
      }
      case WKind::Cond: {
        int d = prove_lit_defined(b, bw);
        int axl = b.axiom("12.9.7", {{"A", AxiomParam(A)},
                                     {"B", AxiomParam(B)},
                                     {"D", AxiomParam(encode(bw->a))},
                                     {"E", AxiomParam(encode(bw->b))},
                                     {"F", AxiomParam(encode(bw->c))},
                                     {"alpha", AxiomParam(alpha)}});
        line = b.mp(axl, prove_conj(b, {wA, vB, d}));
        auto r1 = derive_sub_equation(b, a, x, bw->a);
        line = rewrite_rhs(b, r1.line, line, {Sel::Fn, Sel::Fn, Sel::Arg});
        auto r2 = derive_sub_equation(b, a, x, bw->b);
        line = rewrite_rhs(b, r2.line, line, {Sel::Fn, Sel::Arg});
        auto r3 = derive_sub_equation(b, a, x, bw->c);
        line = rewrite_rhs(b, r3.line, line, {Sel::Arg});
        value = mk_cond(r1.value, r2.value, r3.value);
        line = upgrade_to_eq(b, line, prove_lit_defined(b, value));
        break;
      }
      case WKind::Quote: {
        int d = prove_lit_defined(b, bw->a);
        int axl = b.axiom("12.9.8", {{"A", AxiomParam(A)},
                                     {"B", AxiomParam(B)},
                                     {"C", AxiomParam(encode(bw->a))},
                                     {"alpha", AxiomParam(alpha)}});
        line = b.mp(axl, prove_conj(b, {wA, vB, d}));
        value = bw;
        break;
      }
      case WKind::Eval: {
        if (bw->a->kind != WKind::Quote)
          mfail("MacroFailure", "substitution into an opaque evaluation");
        WffPtr w2 = bw->a->a;
        TypePtr beta = bw->ty;
        auto tw2 = type_of(w2);
        if (!tw2 || !ty_eq(*tw2, beta))
          mfail("MacroFailure",
                "evaluation type disagrees with the represented wff");
        WffPtr ew = encode(bw);
        WffPtr D0 = ew->a->b, carrier = ew->b;
        int d = prove_lit_defined(b, bw);
        int pv = derive_varpred(b, carrier->a);
        int axl = b.axiom("12.9.9", {{"A", AxiomParam(A)},
                                     {"B", AxiomParam(B)},
                                     {"D", AxiomParam(D0)},
                                     {"E", AxiomParam(carrier)},
                                     {"alpha", AxiomParam(alpha)},
                                     {"beta", AxiomParam(beta)}});
        line = b.mp(axl, prove_conj(b, {wA, vB, pv, d}));
        auto r8 = derive_sub_equation(b, a, x, bw->a);
        line = rewrite_rhs(b, r8.line, line,
                           {Sel::Test, Sel::Fn, Sel::Arg, Sel::Arg});
        line = rewrite_rhs(b, r8.line, line,
                           {Sel::Test, Sel::Arg, Sel::Arg, Sel::EBody});
        line = rewrite_rhs(b, r8.line, line, {Sel::Then, Sel::Arg, Sel::EBody});
        int d69 = b.axiom("6.9", {{"A", w2}});
        int l12 = b.axiom("12.1", {{"A", bw->a}});
        d69 = b.rule1(l12, d69, {Sel::Fn, Sel::Arg, Sel::EBody});
        d69 = b.rule1(l12, d69, {Sel::Arg, Sel::EBody});
        int ev = b.mp(b.axiom("11.6", {{"A", encode(w2)}}), d69);
        line = rewrite_rhs(b, ev, line, {Sel::Test, Sel::Arg, Sel::Arg});
        line = rewrite_rhs(b, ev, line, {Sel::Then, Sel::Arg});
        int s1 = derive_synclosed_quot(b, w2);
        int s2 = derive_efpred(b, w2);
        line = rewrite_rhs(b, eq_true(b, prove_conj(b, {s1, s2})), line,
                           {Sel::Test});
        int a101 = b.axiom(
            "10.1", {{"B", AxiomParam(ssub(A, B, encode(w2)))},
                     {"C", AxiomParam(mk_bottom(ty_eps()))}});
        line = rewrite_rhs(b, a101, line, {});
        auto rec = derive_sub_equation(b, a, x, w2);
        line = rewrite_rhs(b, rec.line, line, {});
        value = rec.value;
        line = upgrade_to_eq(b, line, prove_lit_defined(b, value));
        break;
      }
    }
  }
  if (!value || !wff_eq(value, er.value))
    mfail("MacroFailure", "derived value disagrees with the substitution engine");
  return {line, value};
}

int derive_ugen(ProofBuilder& b, const WffPtr& x, int from) {
  if (x->kind != WKind::Var) mfail("MacroFailure", "expected a variable");
  WffPtr A = b.at(from);
  WffPtr lam = mk_abs(x, A);
  int d1 = b.axiom("6.5", {{"x", x}, {"B", A}});
  int c = prove_conj(b, {d1, d1});
  int a3 = b.axiom("3", {{"F", lam}, {"G", lam}, {"x", x}});
  int fa0 = iff_elim(b, b.mp(a3, c), d1);
  int q = b.axiom("4.10", {{"x", x}, {"B", A}});
  const Path P{Sel::Arg, Sel::Body};
  static const Path six[6] = {
      {Sel::Fn, Sel::Arg, Sel::Fn, Sel::Arg, Sel::Fn, Sel::Arg},
      {Sel::Fn, Sel::Arg, Sel::Fn, Sel::Arg, Sel::Arg},
      {Sel::Fn, Sel::Arg, Sel::Arg, Sel::Fn, Sel::Arg},
      {Sel::Fn, Sel::Arg, Sel::Arg, Sel::Arg},
      {Sel::Arg, Sel::Fn, Sel::Arg},
      {Sel::Arg, Sel::Arg}};
  int cur = fa0;
  for (const Path& p : six) cur = b.rule1(q, cur, cat(P, p));
  int et = eq_true(b, b.taut(mk_quasi(A, A)));
  cur = b.rule1(et, cur, P);
  int ef = eq_true(b, from);
  return b.rule1(ef, cur, P);
}

int derive_uinst(ProofBuilder& b, int forall_line, int beta_line) {
  auto m = match_forall(b.at(forall_line));
  if (!m) mfail("PremiseMismatch", "not a universal formula");
  WffPtr x = m->a, A = m->b;
  bool iseq = false;
  auto bm = match_eq_or_quasi(b.at(beta_line), &iseq);
  if (!bm) mfail("PremiseMismatch", "beta line is not an equation");
  WffPtr lhs = bm->a;
  if (lhs->kind != WKind::App || !wff_eq(lhs->a, mk_abs(x, A)))
    mfail("PremiseMismatch", "beta line does not instantiate the universal");
  WffPtr arg = lhs->b, C = bm->b;
  WffPtr x0 = res_var(0, x->ty);
  int ad = prove_defined(b, arg);
  auto rt = derive_beta(b, x0, mk_true(), arg, ad);
  if (!wff_eq(rt.value, mk_true())) mfail("MacroFailure", "unexpected beta value");
  WffPtr tw = mk_true();
  int dT = b.axiom("6.3", {{"A", tw->a}, {"B", tw->b}});
  int eqT = upgrade_to_eq(b, rt.line, dT);
  int l = b.rule1(forall_line, eqT, Path{Sel::Fn, Sel::Arg, Sel::Fn});
  int eb = beta_line;
  if (!iseq) eb = upgrade_to_eq(b, beta_line, prove_defined(b, C));
  l = b.rule1(eb, l, Path{Sel::Fn, Sel::Arg});
  return b.mp(b.taut(mk_implies(mk_eq(C, tw), C)), l);
}

int derive_conapp2(ProofBuilder& b, const WffPtr& op, const WffPtr& aw,
                   const WffPtr& bw) {
  WffPtr x = mk_var("x", ty_eps()), y = mk_var("y", ty_eps());
  WffPtr bodyI = sapp(sapp(mk_quote(op), x), y);
  WffPtr lam = mk_abs(x, mk_abs(y, bodyI));
  WffPtr qa = mk_quote(aw), qb = mk_quote(bw);
  WffPtr r0 = mk_app(mk_app(lam, qa), qb);
  WffPtr res = mk_app(mk_app(op, aw), bw);
  if (!type_of(res)) mfail("MacroFailure", "operator does not apply");
  int da = b.axiom("6.7", {{"A", aw}});
  int db = b.axiom("6.7", {{"A", bw}});
  auto outer = derive_beta(b, x, mk_abs(y, bodyI), qa, da);
  int l = b.axiom("7", {{"A", r0}});
  l = rewrite_rhs(b, outer.line, l, {Sel::Fn});
  WffPtr B1 = outer.value->b;
  auto inner = derive_beta(b, y, B1, qb, db);
  l = rewrite_rhs(b, inner.line, l, {});
  auto bridge = [&](const WffPtr& wrep, const Path& at) {
    if (wff_eq(encode(wrep), mk_quote(wrep))) return;
    int l12 = b.axiom("12.1", {{"A", wrep}});
    l = rewrite_rhs(b, l12, l, at);
  };
  bridge(op, {Sel::Fn, Sel::Arg, Sel::Fn, Sel::Arg});
  bridge(aw, {Sel::Fn, Sel::Arg, Sel::Arg});
  bridge(bw, {Sel::Arg});
  int l12r = b.axiom("12.1", {{"A", res}});
  l = rewrite_rhs(b, l12r, l, {});
  int dres = b.axiom("6.7", {{"A", res}});
  return upgrade_to_eq(b, l, dres);
}

// ---------- theory files ----------

namespace {

std::string strip_comment(const std::string& s) {
  auto p = s.find("//");
  return p == std::string::npos ? s : s.substr(0, p);
}
std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t z = s.find_last_not_of(" \t\r\n");
  return s.substr(a, z - a + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '<' || c == '[' || c == '{') depth++;
    if (c == ')' || c == '>' || c == ']' || c == '}') depth--;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::optional<Theory> parse_theory(const std::string& text, std::string* err) {
  Theory th;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> std::optional<Theory> {
    if (err) *err = "line " + std::to_string(lineno) + ": " + msg;
    return std::nullopt;
  };
  while (std::getline(in, raw)) {
    lineno++;
    std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    try {
      if (s.rfind("mode ", 0) == 0) {
        std::string m = trim(s.substr(5));
        if (m == "ef")
          th.mode = TheoryMode::EvalFree;
        else if (m == "general")
          th.mode = TheoryMode::General;
        else
          return fail("unknown mode " + m);
      } else if (s.rfind("const ", 0) == 0) {
        std::string rest = s.substr(6);
        auto p = rest.find(':');
        if (p == std::string::npos) return fail("expected NAME : TYPE");
        std::string name = trim(rest.substr(0, p));
        TypePtr ty = parse_type(trim(rest.substr(p + 1)));
        std::string e;
        if (!th.sig.declare(name, ty, &e)) return fail(e);
      } else if (s.rfind("def ", 0) == 0) {
        auto p = s.find(":=");
        if (p == std::string::npos) return fail("expected NAME : TYPE := WFF");
        std::string head = trim(s.substr(4, p - 4));
        auto q = head.find(':');
        if (q == std::string::npos) return fail("expected NAME : TYPE := WFF");
        std::string name = trim(head.substr(0, q));
        TypePtr ty = parse_type(trim(head.substr(q + 1)));
        WffPtr body = parse_checked(trim(s.substr(p + 2)), th.sig);
        std::string e;
        if (!th.sig.define(name, ty, body, &e)) return fail(e);
      } else if (s.rfind("hyp ", 0) == 0) {
        WffPtr w = parse_checked(trim(s.substr(4)), th.sig);
        auto t = type_of(w);
        if (!t || (*t)->kind != TyKind::Omicron)
          return fail("hypothesis must have type o");
        if (th.mode == TheoryMode::EvalFree) {
          if (!is_evaluation_free(w) || !free_vars_surface(w).empty())
            return fail("hypothesis must be evaluation-free and closed");
        } else if (syn_closed_p(th.sig, w) != Tri::True) {
          return fail("hypothesis must be syntactically closed");
        }
        th.hyps.push_back(w);
      } else {
        return fail("unrecognized directive");
      }
    } catch (const ParseError& e) {
      return fail(e.what());
    }
  }
  return th;
}

std::optional<Theory> load_theory_file(const std::string& path,
                                       std::string* err) {
  std::ifstream f(path);
  if (!f) {
    if (err) *err = "cannot open " + path;
    return std::nullopt;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_theory(ss.str(), err);
}

// ---------- proof scripts ----------

namespace {

struct RawValue {
  enum Kind { Wff, Type, Ref } kind;
  WffPtr w;
  TypePtr t;
  int ref = 0;
};

std::map<std::string, RawValue> parse_params(const std::string& text,
                                             const Signature& sig,
                                             bool allow_refs) {
  std::map<std::string, RawValue> out;
  std::string s = trim(text);
  if (s.empty()) return out;
  if (s.front() != '{' || s.back() != '}')
    throw ParseError("expected {k=v, ...}");
  s = s.substr(1, s.size() - 2);
  if (trim(s).empty()) return out;
  for (const auto& piece : split_top(s, ',')) {
    auto eq = piece.find('=');
    if (eq == std::string::npos) throw ParseError("expected k=v in parameters");
    std::string k = trim(piece.substr(0, eq));
    std::string v = trim(piece.substr(eq + 1));
    if (k.empty() || v.empty()) throw ParseError("expected k=v in parameters");
    RawValue rv;
    if (v[0] == ':') {
      rv.kind = RawValue::Type;
      rv.t = parse_type(trim(v.substr(1)));
    } else if (v[0] == '@') {
      if (!allow_refs) throw ParseError("line references are macro-only");
      rv.kind = RawValue::Ref;
      rv.ref = std::stoi(v.substr(1));
    } else {
      rv.kind = RawValue::Wff;
      rv.w = parse_checked(v, sig);
    }
    out[k] = rv;
  }
  return out;
}

}  // namespace

CheckReport check_proof_text(const Theory& th, const std::string& text) {
  CheckReport rep;
  std::vector<WffPtr> stated;  // index: line number - 1; null when failed
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    int number = static_cast<int>(stated.size()) + 1;
    LineDiag d;
    d.number = number;
    auto reject = [&](std::string cls, std::string msg) {
      d.ok = false;
      d.cls = std::move(cls);
      d.msg = std::move(msg);
    };
    auto ref_wff = [&](int k) -> WffPtr {
      if (k < 1 || k >= number || !stated[static_cast<std::size_t>(k) - 1])
        throw MacroError{{"BadLineRef",
                          "reference to unavailable line " + std::to_string(k)}};
      return stated[static_cast<std::size_t>(k) - 1];
    };
    WffPtr w;
    try {
      if (s.rfind("line ", 0) != 0) throw ParseError("expected 'line N: ...'");
      auto colon = s.find(':');
      if (colon == std::string::npos) throw ParseError("expected 'line N: ...'");
      int n = std::stoi(trim(s.substr(5, colon - 5)));
      if (n != number)
        throw ParseError("expected line number " + std::to_string(number));
      std::string rest = s.substr(colon + 1);
      auto semi = rest.find(';');
      if (semi == std::string::npos)
        throw ParseError("expected '; <justification>'");
      w = parse_checked(trim(rest.substr(0, semi)), th.sig);
      auto t = type_of(w);
      if (!t || (*t)->kind != TyKind::Omicron)
        throw ParseError("proof line must have type o");
      std::string just = trim(rest.substr(semi + 1));
      std::istringstream js(just);
      std::string head;
      js >> head;
      if (head == "hyp") {
        int k;
        js >> k;
        rep.primitive_steps++;
        if (k < 1 || static_cast<std::size_t>(k) > th.hyps.size())
          throw MacroError{{"BadHypothesis", "no hypothesis " + std::to_string(k)}};
        if (!wff_eq(w, th.hyps[static_cast<std::size_t>(k) - 1]))
          throw MacroError{{"WffMismatch", "stated wff is not hypothesis " +
                                               std::to_string(k)}};
        d.ok = true;
      } else if (head == "axiom") {
        std::string id;
        js >> id;
        std::string ptext;
        std::getline(js, ptext);
        auto raws = parse_params(ptext, th.sig, false);
        AxiomParams ps;
        for (auto& [k, v] : raws)
          ps[k] = v.kind == RawValue::Type ? AxiomParam(v.t) : AxiomParam(v.w);
        if (id == "5" && ps.find("A") == ps.end()) ps["A"] = w;
        rep.primitive_steps++;
        KernelError e;
        auto r = instantiate_axiom(th.sig, id, ps, &e);
        if (!r) throw MacroError{e};
        if (!wff_eq(*r, w))
          throw MacroError{{"WffMismatch",
                            "axiom instance is " + print_wff(*r)}};
        d.ok = true;
      } else if (head == "rule1") {
        int i, j;
        std::string at, ptext;
        js >> i >> j >> at >> ptext;
        if (at != "at") throw ParseError("expected 'rule1 I J at PATH'");
        auto path = parse_path(ptext);
        if (!path) throw ParseError("bad path " + ptext);
        rep.primitive_steps++;
        KernelError e;
        auto r = apply_rule1(ref_wff(i), ref_wff(j), *path, &e);
        if (!r) throw MacroError{e};
        if (!wff_eq(*r, w))
          throw MacroError{{"WffMismatch", "rule yields " + print_wff(*r)}};
        d.ok = true;
      } else if (head == "rule2") {
        int i, j;
        js >> i >> j;
        rep.primitive_steps++;
        KernelError e;
        auto r = apply_rule2(ref_wff(i), ref_wff(j), &e);
        if (!r) throw MacroError{e};
        if (!wff_eq(*r, w))
          throw MacroError{{"WffMismatch", "rule yields " + print_wff(*r)}};
        d.ok = true;
      } else if (head == "macro") {
        std::string name;
        js >> name;
        std::string ptext;
        std::getline(js, ptext);
        auto raws = parse_params(ptext, th.sig, true);
        ProofBuilder b(th.sig);
        auto wparam = [&](const std::string& k) -> WffPtr {
          auto it = raws.find(k);
          if (it == raws.end() || it->second.kind != RawValue::Wff)
            throw MacroError{{"MissingParam", "macro needs wff parameter " + k}};
          return it->second.w;
        };
        auto rparam = [&](const std::string& k) -> int {
          auto it = raws.find(k);
          if (it == raws.end() || it->second.kind != RawValue::Ref)
            throw MacroError{{"MissingParam", "macro needs line reference " + k}};
          return b.given(ref_wff(it->second.ref));
        };
        int r;
        if (name == "ugen") {
          WffPtr x = wparam("x");
          r = derive_ugen(b, x, rparam("from"));
        } else if (name == "uinst") {
          int fa = rparam("from");
          r = derive_uinst(b, fa, rparam("beta"));
        } else if (name == "beta") {
          WffPtr x = wparam("x"), body = wparam("body"), arg = wparam("arg");
          int ad = prove_defined(b, arg);
          r = derive_beta(b, x, body, arg, ad).line;
        } else if (name == "subeq") {
          r = derive_sub_equation(b, wparam("a"), wparam("x"), wparam("b")).line;
        } else if (name == "conapp2") {
          r = derive_conapp2(b, wparam("op"), wparam("a"), wparam("b"));
        } else if (name == "nfi") {
          r = derive_nfi(b, wparam("x"), wparam("b"), true);
        } else if (name == "wffhood") {
          r = derive_wffpred(b, wparam("b"));
        } else if (name == "evalfree") {
          r = derive_efpred(b, wparam("b"));
        } else if (name == "cleanseid") {
          r = derive_cleanse_id(b, wparam("b"));
        } else if (name == "litdef") {
          r = prove_lit_defined(b, wparam("b"));
        } else {
          throw MacroError{{"BadJustification", "unknown macro " + name}};
        }
        rep.primitive_steps += static_cast<std::size_t>(b.size());
        if (!wff_eq(b.at(r), w))
          throw MacroError{{"WffMismatch",
                            "macro derives " + print_wff(b.at(r))}};
        d.ok = true;
      } else {
        throw ParseError("unknown justification " + head);
      }
    } catch (const ParseError& e) {
      reject("ParseError", e.what());
    } catch (const MacroError& e) {
      reject(e.e.cls, e.e.msg);
    } catch (const std::exception& e) {
      reject("ParseError", e.what());
    }
    stated.push_back(d.ok ? w : nullptr);
    rep.diags.push_back(d);
  }
  rep.lines = stated.size();
  rep.ok = !stated.empty();
  for (const auto& d : rep.diags)
    if (!d.ok) rep.ok = false;
  return rep;
}

CheckReport check_proof_file(const Theory& th, const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    CheckReport rep;
    rep.ok = false;
    rep.diags.push_back({0, false, "ParseError", "cannot open " + path});
    return rep;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return check_proof_text(th, ss.str());
}

}  // namespace quqe
