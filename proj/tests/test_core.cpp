// Core syntax: parsing, printing, typing, measures, encoding.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "../src/quqe/encode.hpp"
#include "../src/quqe/sugar.hpp"
#include "../src/quqe/synalg.hpp"
#include "../src/quqe/text.hpp"
#include "gen.hpp"

using namespace quqe;

static Signature empty_sig;

static WffPtr P(const std::string& s) { return parse_wff(s, empty_sig); }

TEST_CASE("type syntax round trips") {
  for (const char* s : {"i", "o", "eps", "(o i)", "((o i) eps)", "<i,o>",
                        "(<i,o> (eps eps))"}) {
    TypePtr t = parse_type(s);
    CHECK(print_type(t) == s);
    CHECK(ty_eq(parse_type(print_type(t)), t));
  }
}

TEST_CASE("wff parsing and re-sugaring round trip") {
  for (const char* s :
       {"x:i", "#Q:((o i) i)", "T", "F", "(x:o & y:o)", "(x:o | y:o)",
        "(x:o => y:o)", "(~ x:o)", "(x:i == y:i)", "(x:i ~~ y:i)", "(x:i !)",
        "(x:i ?)", "(forall x:i . (x:i == x:i))", "(exists x:i . (x:i == y:i))",
        "(exists1 x:i . (x:i == y:i))", "(desc x:i . (x:i == y:i))",
        "(\\ x:i . x:i)", "(if x:o y:i z:i)", "(quote x:i)", "(eval x:eps : o)",
        "bot:i", "bot:o", "fst:<i,o>", "snd:<i,o>", "(quote (quote x:i))",
        "((\\ x:i . x:i) y:i)", "(f:((o i) i) x:i y:i)"}) {
    WffPtr w = P(s);
    std::string p = print_wff(w);
    WffPtr w2 = P(p);
    CHECK_MESSAGE(wff_eq(w, w2), "round trip failed for " << s << " -> " << p);
  }
}

TEST_CASE("printer output reparses to the same wff for random terms") {
  Signature sig;
  gen::Gen g(77, &sig);
  for (int i = 0; i < 2000; ++i) {
    WffPtr w = g.wff(g.type(1), 5);
    if (!type_of(w)) continue;
    std::string p = print_wff(w);
    WffPtr w2 = parse_wff(p, sig);
    REQUIRE_MESSAGE(wff_eq(w, w2), "mismatch for " << p);
  }
}

TEST_CASE("canonical expansions have the expected shapes") {
  CHECK(ty_eq(*type_of(mk_true()), ty_o()));
  CHECK(ty_eq(*type_of(mk_false()), ty_o()));
  // T is the reflexive equation on the o-equality constant
  CHECK(wff_eq(mk_true(), mk_eq(c_Q(ty_o()), c_Q(ty_o()))));
  // F equates two abstractions with the same binder
  auto eq = match_eq(mk_false());
  REQUIRE(eq.has_value());
  CHECK(eq->a->kind == WKind::Abs);
  CHECK(wff_eq(eq->a->a, eq->b->a));
  // the left abstraction of a universal quantifier uses the reserved binder
  auto fa = match_forall(mk_forall(mk_var("v", ty_i()), mk_true()));
  REQUIRE(fa.has_value());
  CHECK(fa->a->name == "v");
  // exists1 shadows its own binder, no fresh variable
  WffPtr x = mk_var("x", ty_i());
  auto e1 = match_exists1(mk_exists1(x, mk_eq(x, x)));
  REQUIRE(e1.has_value());
  CHECK(wff_eq(e1->a, x));
}

TEST_CASE("formation errors are located") {
  WffPtr bad = mk_app(mk_var("x", ty_i()), mk_var("y", ty_i()));
  auto e = formation_error(bad);
  REQUIRE(e.has_value());
  CHECK(e->find("non-function") != std::string::npos);
  CHECK(!type_of(bad));
  WffPtr bad2 = mk_cond(mk_var("p", ty_i()), mk_var("y", ty_i()), mk_var("z", ty_i()));
  CHECK(formation_error(bad2).has_value());
}

TEST_CASE("size and complexity") {
  WffPtr w = P("((\\ x:i . x:i) y:i)");
  CHECK(wff_size(w) == 3);  // binder occurrence + body + argument
  WffPtr q = P("(quote (eval x:eps : o))");
  CHECK(wff_size(q) == 1);
  CHECK(wff_complexity(q).first == 0);  // evaluation inside quotation
  WffPtr e = P("(eval (quote (eval x:eps : o)) : o)");
  CHECK(wff_complexity(e).first == 1);
  CHECK(is_evaluation_free(q));
  CHECK(!is_evaluation_free(e));
}

TEST_CASE("encode/decode are mutually inverse and injective on random wffs") {
  Signature sig;
  gen::Gen g(12345, &sig);
  std::set<std::string> images;
  int n = 0;
  for (int i = 0; i < 3000; ++i) {
    WffPtr w = g.wff(g.type(1), 6);
    if (!type_of(w)) continue;
    ++n;
    WffPtr e = encode(w);
    CHECK(ty_eq(*type_of(e), ty_eps()));
    CHECK(is_evaluation_free(e));
    auto d = decode(e);
    REQUIRE(d.has_value());
    REQUIRE(wff_eq(*d, w));
    images.insert(print_wff(e));
  }
  CHECK(n > 2000);
  // injectivity: distinct wffs got distinct encodings
  std::set<std::string> originals;
  gen::Gen g2(12345, &sig);
  for (int i = 0; i < 3000; ++i) {
    WffPtr w = g2.wff(g2.type(1), 6);
    if (!type_of(w)) continue;
    originals.insert(print_wff(w));
  }
  CHECK(images.size() == originals.size());
}

TEST_CASE("decode rejects non-standard constructions") {
  Signature sig;
  // abs with a non-variable first component
  WffPtr bad = mk_app(c_abs(), encode(mk_const("c", ty_i())), encode(mk_var("x", ty_i())));
  CHECK(!decode(bad).has_value());
  // app with mismatched types
  WffPtr bad2 = mk_app(c_app(), encode(mk_var("f", ty_fun(ty_o(), ty_i()))),
                       encode(mk_var("y", ty_o())));
  CHECK(!decode(bad2).has_value());
  CHECK(!is_literal(mk_var("e", ty_eps())));
}

TEST_CASE("evaluation encoding carries the designated type") {
  WffPtr w = mk_eval(mk_var("e", ty_eps()), ty_i());
  WffPtr e = encode(w);
  auto d = decode(e);
  REQUIRE(d.has_value());
  CHECK(wff_eq(*d, w));
  // lenient in the type slot: any variable name works
  WffPtr e2 = mk_app(c_eval(), encode(mk_var("e", ty_eps())),
                     mk_quote(mk_var("other", ty_i())));
  auto d2 = decode(e2);
  REQUIRE(d2.has_value());
  CHECK(wff_eq(*d2, w));
}

TEST_CASE("paths address subterms") {
  WffPtr w = P("(if x:o (y:i == z:i) w:i)");
  auto p = parse_path("then.arg");
  REQUIRE(p.has_value());
  auto s = subterm_at(w, *p);
  REQUIRE(s.has_value());
  CHECK(wff_eq(*s, P("z:i")));
  auto r = replace_at(w, *p, P("u:i"));
  REQUIRE(r.has_value());
  CHECK(wff_eq(*r, P("(if x:o (y:i == u:i) w:i)")));
  CHECK(path_str(*p) == "then.arg");
}
