// Kernel: axiom schemas, rules, proof scripts, elaboration macros.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/quqe/encode.hpp"
#include "../src/quqe/kernel.hpp"
#include "../src/quqe/synalg.hpp"
#include "../src/quqe/text.hpp"

using namespace quqe;

static Signature sig;
static WffPtr P(const std::string& s) { return parse_wff(s, sig); }

static WffPtr ax(const std::string& id, const AxiomParams& ps) {
  KernelError e;
  auto r = instantiate_axiom(sig, id, ps, &e);
  REQUIRE_MESSAGE(r.has_value(), (e.cls + ": " + e.msg));
  return *r;
}

static std::string ax_fail(const std::string& id, const AxiomParams& ps) {
  KernelError e;
  auto r = instantiate_axiom(sig, id, ps, &e);
  REQUIRE_FALSE(r.has_value());
  return e.cls;
}

TEST_CASE("axiom instances") {
  CHECK(wff_eq(ax("6.1", {{"x", P("x:i")}}), mk_defined(P("x:i"))));
  CHECK(is_true(ax("6.2", {{"c", P("#Q:((o o) o)")}})));
  CHECK(wff_eq(ax("7", {{"A", P("x:i")}}), mk_quasi(P("x:i"), P("x:i"))));
  CHECK(wff_eq(ax("4.2", {{"x", P("x:i")}, {"A", P("y:i")}}),
               mk_quasi(P("((\\ x:i . x:i) y:i)"), P("y:i"))));
  CHECK(wff_eq(ax("11.1", {{"x", P("x:i")}}),
               mk_eq(P("(eval (quote x:i) : i)"), P("x:i"))));
  CHECK(wff_eq(ax("12.1", {{"A", P("(f:(i i) x:i)")}}),
               mk_eq(mk_quote(P("(f:(i i) x:i)")), encode(P("(f:(i i) x:i)")))));
  // every instance is a formula of type o
  for (const char* id : {"1", "2", "3"}) {
    AxiomParams ps;
    if (std::string(id) == "1")
      ps = {{"G", P("g:(o o)")}, {"x", P("x:o")}};
    else if (std::string(id) == "2")
      ps = {{"A", P("x:i")}, {"B", P("y:i")}, {"H", P("f:(i i)")}};
    else
      ps = {{"F", P("f:(i i)")}, {"G", P("g:(i i)")}, {"x", P("x:i")}};
    auto t = type_of(ax(id, ps));
    REQUIRE(t.has_value());
    CHECK((*t)->kind == TyKind::Omicron);
  }
}

TEST_CASE("axiom side conditions") {
  CHECK(ax_fail("4.3", {{"x", P("x:i")}, {"y", P("x:i")}, {"A", P("z:i")}}) ==
        "SideCondition");
  CHECK(ax_fail("6.2", {{"c", P("x:i")}}) == "SideCondition");
  CHECK(ax_fail("6.11", {{"alpha", ty_o()}}) == "SideCondition");
  CHECK(ax_fail("12.4.22", {{"x", P("x:i")}, {"y", P("x:i")}}) ==
        "SideCondition");
  CHECK(ax_fail("12.2.2", {{"A", P("x:i")}}) == "SideCondition");
  CHECK(ax_fail("6.1", {}) == "MissingParam");
  CHECK(ax_fail("6.1", {{"x", ty_i()}}) == "BadParam");
  CHECK(ax_fail("nope", {}) == "UnknownSchema");
  CHECK(ax_fail("5", {{"A", P("(p:o => q:o)")}}) == "NotTautologous");
  CHECK(ax_fail("5", {{"A", P("x:i")}}) == "BadParam");
  // quantified variable must be fresh for the operands
  CHECK(ax_fail("1", {{"G", P("(g:((o o) o) x:o)")}, {"x", P("x:o")}}) ==
        "SideCondition");
  CHECK(ax_fail("3", {{"F", P("f:(i i)")}, {"G", P("(g:((i i) i) x:i)")},
                      {"x", P("x:i")}}) == "SideCondition");
  // non-formula parameters are rejected up front
  CHECK(ax_fail("6.3", {{"A", P("f:(i i)")}, {"B", P("x:i")}}) ==
        "SideCondition");
}

TEST_CASE("rule 1") {
  KernelError e;
  WffPtr prem = mk_eq(P("x:i"), P("y:i"));
  WffPtr tgt = P("(f:(i i) x:i)");
  auto r = apply_rule1(prem, tgt, {Sel::Arg}, &e);
  REQUIRE(r.has_value());
  CHECK(wff_eq(*r, P("(f:(i i) y:i)")));
  // either orientation
  auto r2 = apply_rule1(prem, P("(f:(i i) y:i)"), {Sel::Arg}, &e);
  REQUIRE(r2.has_value());
  CHECK(wff_eq(*r2, tgt));
  // quasi-equation premise
  auto r3 = apply_rule1(mk_quasi(P("x:i"), P("y:i")), tgt, {Sel::Arg}, &e);
  REQUIRE(r3.has_value());
  CHECK(wff_eq(*r3, P("(f:(i i) y:i)")));
  // failures
  CHECK_FALSE(apply_rule1(P("p:o"), tgt, {Sel::Arg}, &e).has_value());
  CHECK(e.cls == "NotAnEquation");
  CHECK_FALSE(
      apply_rule1(prem, P("(\\ x:i . x:i)"), {Sel::Binder}, &e).has_value());
  CHECK(e.cls == "IllegalPath");
  CHECK_FALSE(
      apply_rule1(prem, P("(quote x:i)"), {Sel::QBody}, &e).has_value());
  CHECK(e.cls == "IllegalPath");
  CHECK_FALSE(apply_rule1(prem, tgt, {Sel::Fn, Sel::Fn}, &e).has_value());
  CHECK(e.cls == "NoSuchSubterm");
  CHECK_FALSE(apply_rule1(prem, P("(f:(i i) z:i)"), {Sel::Arg}, &e).has_value());
  CHECK(e.cls == "PremiseMismatch");
  // an evaluation body is addressable
  auto r4 = apply_rule1(mk_eq(P("e:eps"), P("d:eps")),
                        P("(eval e:eps : o)"), {Sel::EBody}, &e);
  REQUIRE(r4.has_value());
  CHECK(wff_eq(*r4, P("(eval d:eps : o)")));
}

TEST_CASE("rule 2") {
  KernelError e;
  auto r = apply_rule2(P("(p:o => q:o)"), P("p:o"), &e);
  REQUIRE(r.has_value());
  CHECK(wff_eq(*r, P("q:o")));
  CHECK_FALSE(apply_rule2(P("(p:o & q:o)"), P("p:o"), &e).has_value());
  CHECK(e.cls == "NotAnImplication");
  CHECK_FALSE(apply_rule2(P("(p:o => q:o)"), P("q:o"), &e).has_value());
  CHECK(e.cls == "PremiseMismatch");
}

TEST_CASE("elaboration: ugen and uinst") {
  ProofBuilder b(sig);
  WffPtr body = mk_or(P("x:o"), mk_not(P("x:o")));
  int t = b.taut(body);
  int g = derive_ugen(b, P("x:o"), t);
  CHECK(wff_eq(b.at(g), mk_forall(P("x:o"), body)));
  auto br = derive_beta(b, P("x:o"), body, P("q:o"),
                        prove_defined(b, P("q:o")));
  CHECK(wff_eq(br.value, mk_or(P("q:o"), mk_not(P("q:o")))));
  int i = derive_uinst(b, g, br.line);
  CHECK(wff_eq(b.at(i), mk_or(P("q:o"), mk_not(P("q:o")))));
}

TEST_CASE("elaboration: beta cases") {
  ProofBuilder b(sig);
  WffPtr x = P("x:i");
  int d = prove_defined(b, P("y:i"));
  auto chk = [&](const std::string& body, const std::string& val) {
    auto r = derive_beta(b, x, P(body), P("y:i"), d);
    CHECK(wff_eq(r.value, P(val)));
  };
  chk("x:i", "y:i");
  chk("z:i", "z:i");
  chk("c:i", "c:i");  // variables named like constants stay variables
  chk("(f:(i i) x:i)", "(f:(i i) y:i)");
  chk("(if p:o x:i z:i)", "(if p:o y:i z:i)");
  chk("(quote (f:(i i) x:i))", "(quote (f:(i i) x:i))");
  chk("(\\ x:i . (f:(i i) x:i))", "(\\ x:i . (f:(i i) x:i))");
  chk("(\\ z:i . (f:(i i) x:i))", "(\\ z:i . (f:(i i) y:i))");
  auto r = derive_beta(b, x, mk_eval(P("(quote (f:(i i) x:i))"), ty_i()),
                       P("y:i"), d);
  CHECK(wff_eq(r.value, P("(f:(i i) y:i)")));
  // a capturing redex is refused, not misderived
  CHECK_THROWS_AS(
      derive_beta(b, x, P("(\\ y:i . (f:(i i) x:i))"), P("y:i"), d),
      MacroError);
}

TEST_CASE("elaboration: sub equation agrees with the engine") {
  ProofBuilder b(sig);
  auto chk = [&](const std::string& a, const std::string& x,
                 const std::string& t) {
    auto r = derive_sub_equation(b, P(a), P(x), P(t));
    auto er = subst(sig, P(a), P(x), P(t));
    REQUIRE(er.tag == PartialResult::Defined);
    CHECK(wff_eq(r.value, er.value));
  };
  chk("y:i", "x:i", "x:i");
  chk("y:i", "x:i", "(f:(i i) x:i)");
  chk("y:i", "x:i", "(\\ z:i . (f:(i i) x:i))");
  chk("y:i", "x:i", "(\\ x:i . (f:(i i) x:i))");
  chk("y:i", "x:i", "(if p:o x:i x:i)");
  chk("y:i", "x:i", "(quote x:i)");
  chk("y:i", "x:i", "(eval (quote (f:(i i) x:i)) : i)");
}

TEST_CASE("elaboration: syntactic predicates") {
  ProofBuilder b(sig);
  WffPtr w = P("(f:(i i) x:i)");
  int l = derive_wffpred(b, w);
  CHECK(wff_eq(b.at(l), mk_app(c_wff(ty_i()), encode(w))));
  int l2 = derive_efpred(b, w);
  CHECK(wff_eq(b.at(l2), mk_app(mk_evalfreepred(ty_i()), encode(w))));
  int l3 = derive_nfi(b, P("x:i"), P("(\\ x:i . x:i)"), true);
  CHECK(wff_eq(b.at(l3),
               mk_app(c_nfi(), mk_quote(P("x:i")), mk_quote(P("(\\ x:i . x:i)")))));
  CHECK_THROWS_AS(derive_nfi(b, P("x:i"), P("(f:(i i) x:i)"), true), MacroError);
  int l4 = derive_synclosed_quot(b, P("(\\ x:i . x:i)"));
  CHECK(wff_eq(b.at(l4),
               mk_app(mk_synclosed(),
                      mk_app(c_quot(), encode(P("(\\ x:i . x:i)"))))));
}

TEST_CASE("theory files") {
  std::string err;
  auto th = parse_theory(
      "// example\n"
      "mode ef\n"
      "const f : (i i)\n"
      "def total : o := (forall x:i . ((#f:(i i) x:i) == (#f:(i i) x:i)))\n"
      "hyp (forall x:i . ((#f:(i i) x:i) ~~ (#f:(i i) x:i)))\n",
      &err);
  REQUIRE_MESSAGE(th.has_value(), err);
  CHECK(th->mode == TheoryMode::EvalFree);
  CHECK(th->hyps.size() == 1);
  // open hypotheses are rejected in ef mode
  CHECK_FALSE(parse_theory("mode ef\nhyp (p:o | (~ p:o))\n", &err).has_value());
  // evaluations are rejected in ef mode but allowed when syntactically closed
  std::string ghyp = "hyp ((eval (quote T) : o) => T)\n";
  CHECK_FALSE(parse_theory("mode ef\n" + ghyp, &err).has_value());
  CHECK(parse_theory("mode general\n" + ghyp, &err).has_value());
  // a quotation of an open wff is not syntactically closed
  CHECK_FALSE(parse_theory("mode general\nhyp ((eval (quote (p:o & q:o)) : o)"
                           " => T)\n",
                           &err)
                  .has_value());
}

TEST_CASE("proof scripts") {
  Theory th;
  th.hyps.push_back(P("(p:o => q:o)"));
  th.hyps.push_back(P("p:o"));
  std::string good =
      "// modus ponens\n"
      "line 1: (p:o => q:o) ; hyp 1\n"
      "line 2: p:o ; hyp 2\n"
      "line 3: q:o ; rule2 1 2\n";
  auto rep = check_proof_text(th, good);
  CHECK(rep.ok);
  CHECK(rep.lines == 3);
  CHECK(rep.primitive_steps == 3);

  auto fails_with = [&](const std::string& text, const std::string& cls) {
    auto r = check_proof_text(th, text);
    CHECK_FALSE(r.ok);
    bool found = false;
    for (const auto& d : r.diags)
      if (!d.ok && d.cls == cls) found = true;
    CHECK_MESSAGE(found, ("expected " + cls));
  };
  fails_with("line 1: q:o ; hyp 1\n", "WffMismatch");
  fails_with("line 1: p:o ; hyp 7\n", "BadHypothesis");
  fails_with("line 2: p:o ; hyp 2\n", "ParseError");
  fails_with("line 1: p:o ; hyp 2\nline 2: q:o ; rule2 3 1\n", "BadLineRef");
  fails_with("line 1: T ; axiom 6.2 {c=x:i}\n", "SideCondition");
  fails_with("line 1: (p:o => q:o) ; axiom 5\n", "NotTautologous");
  fails_with("line 1: T ; wizardry\n", "ParseError");
  // a failed line poisons its dependents but later lines still check
  auto r = check_proof_text(
      th, "line 1: q:o ; hyp 1\nline 2: p:o ; hyp 2\nline 3: p:o ; hyp 2\n");
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.diags[0].ok);
  CHECK(r.diags[1].ok);
  CHECK(r.diags[2].ok);

  std::string axioms =
      "line 1: T ; axiom 6.2 {c=#Q:((o o) o)}\n"
      "line 2: ((x:i == x:i) | (~ (x:i == x:i))) ; axiom 5\n"
      "line 3: (forall x:i . ((x:i == x:i) | (~ (x:i == x:i)))) ; "
      "macro ugen {x=x:i, from=@2}\n";
  CHECK(check_proof_text(th, axioms).ok);
}
