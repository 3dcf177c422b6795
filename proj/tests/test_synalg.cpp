// Syntactic algebra: not-free-in, syntactic closure, cleanse, substitution.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/quqe/sugar.hpp"
#include "../src/quqe/synalg.hpp"
#include "../src/quqe/text.hpp"

using namespace quqe;

static Signature sig;

static WffPtr P(const std::string& s) { return parse_wff(s, sig); }

TEST_CASE("not-free-in basics") {
  WffPtr x = P("x:i");
  CHECK(not_free_in(sig, x, P("x:i")) == Tri::False);
  CHECK(not_free_in(sig, x, P("y:i")) == Tri::True);
  CHECK(not_free_in(sig, x, P("x:o")) == Tri::True);  // type matters
  CHECK(not_free_in(sig, x, P("(\\ x:i . x:i)")) == Tri::True);
  CHECK(not_free_in(sig, x, P("(\\ y:i . x:i)")) == Tri::False);
  CHECK(not_free_in(sig, x, P("(quote x:i)")) == Tri::True);
  CHECK(not_free_in(sig, x, P("(if (x:i == x:i) y:i z:i)")) == Tri::False);
  // free variables of the evaluation body are unknowable
  CHECK(not_free_in(sig, x, P("(eval e:eps : i)")) == Tri::Unknown);
  // but an evaluation of a quotation is transparent
  CHECK(not_free_in(sig, x, P("(eval (quote x:i) : i)")) == Tri::False);
  CHECK(not_free_in(sig, x, P("(eval (quote y:i) : i)")) == Tri::True);
}

TEST_CASE("syntactic closure") {
  CHECK(syn_closed_p(sig, P("(\\ x:i . x:i)")) == Tri::True);
  CHECK(syn_closed_p(sig, P("x:i")) == Tri::False);
  CHECK(syn_closed_p(sig, P("(quote x:i)")) == Tri::True);
  CHECK(syn_closed_p(sig, P("(eval q:eps : o)")) == Tri::Unknown);
  CHECK(syn_closed_p(sig, P("(\\ q:eps . (eval q:eps : o))")) == Tri::Unknown);
}

TEST_CASE("cleanse eliminates evaluations of quotations") {
  auto r = cleanse(sig, P("(eval (quote y:o) : o)"));
  REQUIRE(r.tag == PartialResult::Defined);
  CHECK(wff_eq(r.value, P("y:o")));
  auto r2 = cleanse(sig, P("(\\ x:i . (eval (quote x:i) : i))"));
  REQUIRE(r2.tag == PartialResult::Defined);
  CHECK(wff_eq(r2.value, P("(\\ x:i . x:i)")));
  // evaluation-free input passes through unchanged
  WffPtr w = P("(if (x:o & y:o) (quote z:i) (quote w:i))");
  auto r3 = cleanse(sig, w);
  REQUIRE(r3.tag == PartialResult::Defined);
  CHECK(wff_eq(r3.value, w));
}

TEST_CASE("cleanse of an evaluation with a free construction variable is Undefined") {
  CHECK(cleanse(sig, P("(eval x:eps : o)")).tag == PartialResult::Undefined);
  CHECK(cleanse(sig, P("(eval x:eps : i)")).tag == PartialResult::Undefined);
  CHECK(cleanse(sig, P("(eval x:eps : eps)")).tag == PartialResult::Undefined);
}

TEST_CASE("substitution base and abstraction clauses") {
  // plain replacement
  auto r = subst(sig, P("y:i"), P("x:i"), P("(f:((i i) i) x:i x:i)"));
  REQUIRE(r.tag == PartialResult::Defined);
  CHECK(wff_eq(r.value, P("(f:((i i) i) y:i y:i)")));
  // shadowed binder blocks the substitution
  auto r2 = subst(sig, P("y:i"), P("x:i"), P("(\\ x:i . x:i)"));
  REQUIRE(r2.tag == PartialResult::Defined);
  CHECK(wff_eq(r2.value, P("(\\ x:i . x:i)")));
  // capture makes it undefined
  auto r3 = subst(sig, P("y:i"), P("x:i"), P("(\\ y:i . x:i)"));
  CHECK(r3.tag == PartialResult::Undefined);
  // quotations are opaque
  auto r4 = subst(sig, P("y:i"), P("x:i"), P("(quote x:i)"));
  REQUIRE(r4.tag == PartialResult::Defined);
  CHECK(wff_eq(r4.value, P("(quote x:i)")));
}

TEST_CASE("double substitution: only the first substitution has an effect") {
  // replacing x:eps by (quote A) inside (eval x:eps : o), A closed of type o
  WffPtr A = P("(p:o & q:o)");
  WffPtr a = mk_quote(A);
  auto r = subst(sig, a, P("x:eps"), P("(eval x:eps : o)"));
  REQUIRE(r.tag == PartialResult::Defined);
  CHECK_MESSAGE(wff_eq(r.value, A), "got " << print_wff(r.value));
}

TEST_CASE("double substitution: both substitutions have an effect") {
  WffPtr xx = P("(x:eps == x:eps)");
  WffPtr a = mk_quote(xx);
  auto r = subst(sig, a, P("x:eps"), P("(eval x:eps : o)"));
  REQUIRE(r.tag == PartialResult::Defined);
  WffPtr expect = mk_eq(mk_quote(xx), mk_quote(xx));
  CHECK_MESSAGE(wff_eq(r.value, expect), "got " << print_wff(r.value));
}

TEST_CASE("substituting into an opaque evaluation is undefined or unknown, never wrong") {
  // the replacement is not syntactically closed, so the gates cannot pass
  auto r = subst(sig, P("y:eps"), P("x:eps"), P("(eval x:eps : o)"));
  CHECK(r.tag != PartialResult::Defined);
}

TEST_CASE("epsilon_eval on literals and constructors") {
  WffPtr w = P("(\\ x:i . x:i)");
  auto r = epsilon_eval(sig, mk_quote(w));
  REQUIRE(r.tag == PartialResult::Defined);
  CHECK(wff_eq(r.value, w));
  // constructor application of two literals evaluates to the combined literal
  WffPtr app2 = mk_app(c_app(), encode(P("f:(i i)")), encode(P("y:i")));
  auto r2 = epsilon_eval(sig, app2);
  REQUIRE(r2.tag == PartialResult::Defined);
  CHECK(wff_eq(r2.value, P("(f:(i i) y:i)")));
  // ill-typed combination is a non-standard construction
  WffPtr bad = mk_app(c_app(), encode(P("y:i")), encode(P("z:i")));
  CHECK(epsilon_eval(sig, bad).tag == PartialResult::Undefined);
  // free construction variables cannot be evaluated
  CHECK(epsilon_eval(sig, P("e:eps")).tag == PartialResult::Unknown);
}

TEST_CASE("eval_formula decides closure formulas") {
  CHECK(eval_formula(sig, mk_eq(mk_quote(P("x:i")), mk_quote(P("x:i")))) == Tri::True);
  CHECK(eval_formula(sig, mk_eq(mk_quote(P("x:i")), mk_quote(P("y:i")))) == Tri::False);
  CHECK(eval_formula(sig, P("(T & T)")) == Tri::True);
  CHECK(eval_formula(sig, P("(T & F)")) == Tri::False);
}
