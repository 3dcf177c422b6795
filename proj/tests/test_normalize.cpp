// Normalizer: quotation canonicalization, beta, disquotation, strictness.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/quqe/normalize.hpp"
#include "../src/quqe/sugar.hpp"
#include "../src/quqe/text.hpp"

using namespace quqe;

static Signature sig;

static WffPtr P(const std::string& s) { return parse_wff(s, sig); }

static NormResult N(const std::string& s) { return normalize(sig, P(s)); }

TEST_CASE("quotations canonicalize to literals") {
  auto r = N("(quote (f:(i i) x:i))");
  CHECK(r.tag == NormTag::Value);
  CHECK(is_literal(r.wff));
  auto d = decode(r.wff);
  REQUIRE(d.has_value());
  CHECK(wff_eq(*d, P("(f:(i i) x:i)")));
  // atomic quotations are already canonical
  auto r2 = N("(quote x:i)");
  CHECK(r2.tag == NormTag::Value);
  CHECK(wff_eq(r2.wff, P("(quote x:i)")));
}

TEST_CASE("disquotation") {
  auto r = N("(eval (quote (f:(i i) x:i)) : i)");
  CHECK(r.tag == NormTag::Value);
  CHECK(wff_eq(r.wff, P("(f:(i i) x:i)")));
  // wrong designated type collapses; at type o the bottom is F
  CHECK(is_false(N("(eval (quote x:i) : o)").wff));
  CHECK(N("(eval (quote x:o) : i)").tag == NormTag::Bottom);
  // a represented wff that is not evaluation-free collapses
  CHECK(is_false(N("(eval (quote (eval x:eps : o)) : o)").wff));
  // opaque evaluation is stuck
  CHECK(N("(eval e:eps : o)").tag == NormTag::Stuck);
  // evaluation pushes over conditionals
  auto r2 = N("(eval (if T (quote x:i) (quote y:i)) : i)");
  CHECK(r2.tag == NormTag::Value);
  CHECK(wff_eq(r2.wff, P("x:i")));
}

TEST_CASE("beta reduction") {
  auto r = N("((\\ x:i . x:i) y:i)");
  CHECK(r.tag == NormTag::Value);
  CHECK(wff_eq(r.wff, P("y:i")));
  auto r2 = N("((\\ x:o . (x:o & T)) p:o)");
  CHECK(r2.tag == NormTag::Value);
  CHECK(wff_eq(r2.wff, P("p:o")));
  // undefined argument collapses the redex
  CHECK(N("((\\ x:i . y:i) bot:i)").tag == NormTag::Bottom);
  // shadowed binder drops the argument
  auto r3 = N("((\\ x:i . (\\ x:i . x:i)) y:i)");
  CHECK(r3.tag == NormTag::Value);
  CHECK(wff_eq(r3.wff, P("(\\ x:i . x:i)")));
}

TEST_CASE("conditionals and connectives") {
  CHECK(wff_eq(N("(if T x:i y:i)").wff, P("x:i")));
  CHECK(wff_eq(N("(if F x:i y:i)").wff, P("y:i")));
  CHECK(N("(if p:o x:i y:i)").tag == NormTag::Stuck);
  CHECK(is_false(N("(T & F)").wff));
  CHECK(is_true(N("(T & T)").wff));
  CHECK(is_true(N("(F | T)").wff));
  CHECK(is_false(N("(T => F)").wff));
  CHECK(is_true(N("(F => p:o)").wff));
  CHECK(is_false(N("(~ T)").wff));
  CHECK(is_true(N("(~ F)").wff));
  // open connective applications still reach a normal form
  CHECK(N("(p:o & q:o)").tag == NormTag::Value);
}

TEST_CASE("equality") {
  CHECK(is_true(N("(y:i == y:i)").wff));
  CHECK(is_true(N("((quote x:i) == (quote x:i))").wff));
  CHECK(is_false(N("((quote x:i) == (quote y:i))").wff));
  // reflexive equation of an undefined term is false, not true
  CHECK(is_false(N("(bot:i == bot:i)").wff));
  CHECK(N("(x:i == y:i)").tag == NormTag::Value);  // open, irreducible
}

TEST_CASE("strictness propagates bottoms") {
  CHECK(N("(f:(i i) bot:i)").tag == NormTag::Bottom);
  CHECK(is_false(N("(p:(o i) bot:i)").wff));  // type-o applications are false
}

TEST_CASE("construction operations at the object level") {
  WffPtr w = mk_app(c_app(), P("(quote f:(i i))"), P("(quote x:i)"));
  auto r = normalize(sig, w);
  CHECK(r.tag == NormTag::Value);
  CHECK(wff_eq(r.wff, encode(P("(f:(i i) x:i)"))));
  // abs with a non-variable first component is a non-construction
  auto rb = normalize(sig, mk_app(c_abs(), mk_quote(mk_const("c", ty_i())),
                                  mk_quote(mk_const("c", ty_i()))));
  CHECK(rb.tag == NormTag::Bottom);
  // object-level sub
  WffPtr s = mk_app(c_sub(), P("(quote y:i)"), P("(quote x:i)"),
                    P("(quote (f:(i i) x:i))"));
  auto rs = normalize(sig, s);
  CHECK(rs.tag == NormTag::Value);
  CHECK(wff_eq(rs.wff, encode(P("(f:(i i) y:i)"))));
  // object-level cleanse of an opaque evaluation is undefined
  WffPtr c = mk_app(c_cleanse(), P("(quote (eval x:eps : o))"));
  CHECK(normalize(sig, c).tag == NormTag::Bottom);
  // object-level not-free-in
  WffPtr nfi = mk_app(c_nfi(), P("(quote x:i)"), P("(quote (\\ x:i . x:i))"));
  CHECK(is_true(normalize(sig, nfi).wff));
}

TEST_CASE("pair projections") {
  WffPtr pr = mk_app(c_pair(ty_i(), ty_o()), P("x:i"), P("p:o"));
  WffPtr f = mk_app(P("fst:<i,o>"), pr);
  auto r = normalize(sig, f);
  CHECK(r.tag == NormTag::Value);
  CHECK(wff_eq(r.wff, P("x:i")));
  WffPtr s = mk_app(P("snd:<i,o>"), pr);
  auto r2 = normalize(sig, s);
  CHECK(r2.tag == NormTag::Value);
  CHECK(wff_eq(r2.wff, P("p:o")));
}

TEST_CASE("fuel exhaustion is reported") {
  auto r = normalize(sig, P("((\\ x:o . (x:o & x:o)) (T | F))"), 1);
  CHECK(r.tag == NormTag::Fuel);
}

TEST_CASE("taut_check") {
  std::string err;
  CHECK(taut_check(P("(p:o | (~ p:o))"), &err) == true);
  CHECK(taut_check(P("((p:o => q:o) => (((q:o => r:o)) => (p:o => r:o)))"), &err) == true);
  CHECK(taut_check(P("(p:o => q:o)"), &err) == false);
  CHECK(taut_check(P("T"), &err) == true);
  CHECK(taut_check(P("F"), &err) == false);
  CHECK(taut_check(P("((p:o == q:o) => (q:o == p:o))"), &err) == true);
  CHECK(!taut_check(P("x:i"), &err).has_value());
}

TEST_CASE("is_defined and literal_equal") {
  CHECK(is_defined(sig, P("x:i")) == Tri::True);
  CHECK(is_defined(sig, P("bot:i")) == Tri::False);
  CHECK(is_defined(sig, P("(f:(i i) x:i)")) == Tri::Unknown);
  CHECK(literal_equal(P("(quote x:i)"), encode(P("x:i"))) == true);
  CHECK(literal_equal(P("(quote x:i)"), P("(quote y:i)")) == false);
  CHECK(!literal_equal(P("e:eps"), P("(quote x:i)")).has_value());
}
