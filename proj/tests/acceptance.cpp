// Acceptance suite; prints one pass/fail line per criterion.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "../src/quqe/encode.hpp"
#include "../src/quqe/kernel.hpp"
#include "../src/quqe/normalize.hpp"
#include "../src/quqe/synalg.hpp"
#include "../src/quqe/text.hpp"

using namespace quqe;
using nlohmann::json;
using clock_t_ = std::chrono::steady_clock;

namespace {

Signature sig;
std::mt19937 rng(20260824);

int rnd(int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

TypePtr gen_type(int depth) {
  int k = rnd(depth > 0 ? 5 : 3);
  switch (k) {
    case 0: return ty_i();
    case 1: return ty_o();
    case 2: return ty_eps();
    case 3: return ty_fun(gen_type(depth - 1), gen_type(depth - 1));
    default: return ty_pair(gen_type(depth - 1), gen_type(depth - 1));
  }
}

// Arbitrary well-formed wff of the given type; may contain free variables
// and evaluations.
WffPtr gen_wff(const TypePtr& ty, int depth, std::vector<WffPtr> env,
               bool allow_eval) {
  std::vector<WffPtr> fits;
  for (const auto& v : env)
    if (ty_eq(v->ty, ty)) fits.push_back(v);
  if (depth <= 0) {
    if (!fits.empty() && rnd(2)) return fits[static_cast<std::size_t>(rnd((int)fits.size()))];
    static const char* names[] = {"u", "v", "w"};
    return mk_var(names[rnd(3)], ty);
  }
  int k = rnd(8);
  switch (k) {
    case 0:
      if (!fits.empty()) return fits[static_cast<std::size_t>(rnd((int)fits.size()))];
      return mk_var("u", ty);
    case 1: {
      TypePtr at = gen_type(2);
      WffPtr f = gen_wff(ty_fun(ty, at), depth - 1, env, allow_eval);
      WffPtr a = gen_wff(at, depth - 1, env, allow_eval);
      return mk_app(f, a);
    }
    case 2: {
      if (ty->kind != TyKind::Fun) break;
      WffPtr x = mk_var("b" + std::to_string(rnd(3)), ty->b);
      env.push_back(x);
      return mk_abs(x, gen_wff(ty->a, depth - 1, env, allow_eval));
    }
    case 3:
      return mk_cond(gen_wff(ty_o(), depth - 1, env, allow_eval),
                     gen_wff(ty, depth - 1, env, allow_eval),
                     gen_wff(ty, depth - 1, env, allow_eval));
    case 4:
      if (ty->kind != TyKind::Epsilon) break;
      return mk_quote(gen_wff(gen_type(2), depth - 1, env, allow_eval));
    case 5:
      if (!allow_eval) break;
      return mk_eval(gen_wff(ty_eps(), depth - 1, env, allow_eval), ty);
    default: break;
  }
  return gen_wff(ty, depth - 1, env, allow_eval);
}

// Closed, evaluation-free wff of the given type.
WffPtr gen_closed(const TypePtr& ty, int depth, std::vector<WffPtr> env) {
  std::vector<WffPtr> fits;
  for (const auto& v : env)
    if (ty_eq(v->ty, ty)) fits.push_back(v);
  if (depth > 0 && rnd(3) == 0) {
    switch (rnd(3)) {
      case 0: {
        TypePtr at = gen_type(1);
        WffPtr x = mk_var("c" + std::to_string(rnd(3)), at);
        auto env2 = env;
        env2.push_back(x);
        return mk_app(mk_abs(x, gen_closed(ty, depth - 1, env2)),
                      gen_closed(at, depth - 1, env));
      }
      case 1:
        return mk_cond(gen_closed(ty_o(), depth - 1, env),
                       gen_closed(ty, depth - 1, env),
                       gen_closed(ty, depth - 1, env));
      default: break;
    }
  }
  if (!fits.empty() && rnd(2))
    return fits[static_cast<std::size_t>(rnd((int)fits.size()))];
  switch (ty->kind) {
    case TyKind::Omicron: return rnd(2) ? mk_true() : mk_false();
    case TyKind::Iota: return mk_const("c", ty_i());
    case TyKind::Epsilon: return mk_quote(rnd(2) ? mk_var("q", ty_i()) : WffPtr(mk_true()));
    case TyKind::Fun: {
      WffPtr x = mk_var("c" + std::to_string(rnd(3)), ty->b);
      env.push_back(x);
      return mk_abs(x, gen_closed(ty->a, depth - 1, env));
    }
    case TyKind::Pair:
      return mk_app(c_pair(ty->a, ty->b), gen_closed(ty->a, depth - 1, env),
                    gen_closed(ty->b, depth - 1, env));
  }
  return mk_true();
}

bool free_in(const WffPtr& x, const WffPtr& w) {
  for (const auto& v : free_vars_surface(w))
    if (wff_eq(v, x)) return true;
  return false;
}

// Independent substitution oracle for evaluation-free targets; returns null
// on variable capture.
WffPtr oracle_sub(const WffPtr& a, const WffPtr& x, const WffPtr& d, bool& undef) {
  switch (d->kind) {
    case WKind::Var: return wff_eq(d, x) ? a : d;
    case WKind::Const: return d;
    case WKind::Quote: return d;
    case WKind::App: {
      WffPtr f = oracle_sub(a, x, d->a, undef);
      WffPtr g = oracle_sub(a, x, d->b, undef);
      return undef ? nullptr : mk_app(f, g);
    }
    case WKind::Cond: {
      WffPtr t = oracle_sub(a, x, d->a, undef);
      WffPtr u = oracle_sub(a, x, d->b, undef);
      WffPtr v = oracle_sub(a, x, d->c, undef);
      return undef ? nullptr : mk_cond(t, u, v);
    }
    case WKind::Abs: {
      if (wff_eq(d->a, x)) return d;
      if (!free_in(x, d->b)) return d;
      if (free_in(d->a, a)) {
        undef = true;
        return nullptr;
      }
      WffPtr b = oracle_sub(a, x, d->b, undef);
      return undef ? nullptr : mk_abs(d->a, b);
    }
    case WKind::Eval: break;
  }
  undef = true;
  return nullptr;
}

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& note) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << "\n";
  if (!ok) failures++;
}

double secs_since(clock_t_::time_point t0) {
  return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion1() {
  auto t0 = clock_t_::now();
  bool ok = true;
  std::string note;
  for (int i = 0; i < 10000 && ok; i++) {
    WffPtr w = gen_wff(gen_type(2), 1 + rnd(8), {}, true);
    WffPtr e = encode(w);
    if (!is_literal(e)) { ok = false; note = "encoding is not a literal"; break; }
    auto d = decode(e);
    if (!d || !wff_eq(*d, w)) { ok = false; note = "decode(encode(w)) != w"; break; }
  }
  double dt = secs_since(t0);
  if (ok && dt >= 30.0) { ok = false; note = "too slow"; }
  report(1, "encode/decode round trip on 10000 wffs", ok,
         note.empty() ? std::to_string(dt) + "s" : note);
}

void criterion2() {
  auto t0 = clock_t_::now();
  bool ok = true;
  std::string note;
  for (int i = 0; i < 2000 && ok; i++) {
    TypePtr ty = gen_type(1);
    WffPtr w = gen_closed(ty, 1 + rnd(5), {});
    auto r1 = normalize(sig, mk_eval(mk_quote(w), ty));
    auto r2 = normalize(sig, w);
    if (r1.tag != r2.tag || (r1.tag == NormTag::Value && !wff_eq(r1.wff, r2.wff))) {
      ok = false;
      note = "disquotation disagrees on " + print_wff(w);
    }
  }
  double dt = secs_since(t0);
  if (ok && dt >= 60.0) { ok = false; note = "too slow"; }
  report(2, "disquotation of 2000 closed evaluation-free wffs", ok,
         note.empty() ? std::to_string(dt) + "s" : note);
}

void criterion3() {
  auto t0 = clock_t_::now();
  bool ok = true;
  std::string note;
  int done = 0;
  while (done < 5000 && ok) {
    TypePtr xt = gen_type(1);
    WffPtr x = mk_var("x", xt);
    WffPtr a = gen_wff(xt, rnd(4), {}, false);
    WffPtr d = gen_wff(gen_type(1), 1 + rnd(5), {x}, false);
    bool undef = false;
    WffPtr want = oracle_sub(a, x, d, undef);
    if (undef) continue;
    done++;
    auto r = subst(sig, a, x, d);
    if (r.tag != PartialResult::Defined || !wff_eq(r.value, want)) {
      ok = false;
      note = "engine disagrees with oracle on " + print_wff(d);
    }
  }
  int captures = 0;
  for (int i = 0; i < 500 && ok; i++) {
    // λy. f x y with a containing y free: substitution must be undefined
    WffPtr x = mk_var("x", ty_i()), y = mk_var("y", ty_i());
    WffPtr body = mk_app(mk_var("f", ty_fn(ty_i(), {ty_i(), ty_i()})), x, y);
    WffPtr d = mk_abs(y, body);
    WffPtr a = rnd(2) ? y : WffPtr(mk_app(mk_var("g", ty_fun(ty_i(), ty_i())), y));
    auto r = subst(sig, a, x, d);
    if (r.tag != PartialResult::Undefined) {
      ok = false;
      note = "capture not reported as undefined";
    }
    captures++;
  }
  double dt = secs_since(t0);
  if (ok && dt >= 60.0) { ok = false; note = "too slow"; }
  report(3, "substitution matches oracle on 5000 cases, 500 captures undefined",
         ok, note.empty() ? std::to_string(dt) + "s" : note);
}

void criterion4() {
  bool ok = true;
  std::string note;
  json j = json::parse(slurp("fixtures/double_subst.json"));
  for (const auto& c : j["double_subst"]) {
    WffPtr w = parse_wff(c["wff"].get<std::string>(), sig);
    WffPtr x1 = parse_wff(c["x1"].get<std::string>(), sig);
    WffPtr a1 = parse_wff(c["a1"].get<std::string>(), sig);
    std::string expect = c["expect"].get<std::string>();
    auto r1 = subst(sig, a1, x1, w);
    if (r1.tag != PartialResult::Defined) {
      if (expect != "undefined") { ok = false; note = "unexpected undefined"; }
      continue;
    }
    WffPtr x2 = parse_wff(c["x2"].get<std::string>(), sig);
    WffPtr a2 = parse_wff(c["a2"].get<std::string>(), sig);
    auto r2 = subst(sig, a2, x2, r1.value);
    if (r2.tag != PartialResult::Defined) {
      if (expect != "undefined") { ok = false; note = "unexpected undefined"; }
      continue;
    }
    if (expect == "undefined" || print_wff(r2.value) != expect) {
      ok = false;
      note = "got " + print_wff(r2.value);
    }
  }
  for (const auto& c : j["cleanse"]) {
    WffPtr w = parse_wff(c["wff"].get<std::string>(), sig);
    std::string expect = c["expect"].get<std::string>();
    auto r = cleanse(sig, w);
    if (expect == "undefined") {
      if (r.tag != PartialResult::Undefined) { ok = false; note = "cleanse should be undefined"; }
    } else if (r.tag != PartialResult::Defined || print_wff(r.value) != expect) {
      ok = false;
      note = "cleanse mismatch";
    }
  }
  report(4, "double substitution and cleanse fixtures", ok, note);
}

void criterion5() {
  auto t0 = clock_t_::now();
  bool ok = true;
  std::string note;
  std::string err;
  auto th = load_theory_file("stdlib/stdlib.quqe", &err);
  if (!th) {
    report(5, "and-simp exhaustive table", false, err);
    return;
  }
  WffPtr simp = parse_wff("#and-simp:((eps eps) eps)", th->sig);
  json j = json::parse(slurp("fixtures/and_simp.json"));
  std::vector<WffPtr> ops;
  for (const auto& s : j["operands"])
    ops.push_back(parse_wff(s.get<std::string>(), th->sig));
  for (const auto& c : j["cases"]) {
    WffPtr A = ops[c["a"].get<std::size_t>()];
    WffPtr B = ops[c["b"].get<std::size_t>()];
    std::string rule = c["rule"].get<std::string>();
    WffPtr want;
    if (rule == "second") want = encode(B);
    else if (rule == "first") want = encode(A);
    else if (rule == "false") want = encode(mk_false());
    else want = encode(mk_and(A, B));
    auto r = normalize(th->sig, mk_app(simp, mk_quote(A), mk_quote(B)));
    if (r.tag != NormTag::Value || !wff_eq(r.wff, want)) {
      ok = false;
      note = "pair (" + print_wff(A) + ", " + print_wff(B) + ")";
    }
  }
  double dt = secs_since(t0);
  if (ok && dt >= 1.0) { ok = false; note = "too slow"; }
  report(5, "and-simp exhaustive table", ok,
         note.empty() ? std::to_string(dt) + "s" : note);
}

void criterion6() {
  auto t0 = clock_t_::now();
  bool ok = true;
  std::string note;
  Theory th;
  for (const char* f : {"proofs/t_true.qpf", "proofs/lem.qpf",
                        "proofs/implies_eq.qpf", "proofs/subeq.qpf"}) {
    auto rep = check_proof_file(th, f);
    if (!rep.ok) {
      ok = false;
      note = std::string(f) + " rejected";
      for (const auto& d : rep.diags)
        if (!d.ok) note += ": " + d.cls + " " + d.msg;
    }
  }
  double dt = secs_since(t0);
  if (ok && dt >= 5.0) { ok = false; note = "too slow"; }
  json muts = json::parse(slurp("fixtures/mutations.json"));
  for (const auto& m : muts) {
    if (!ok) break;
    auto rep = check_proof_file(th, m["file"].get<std::string>());
    std::string want = m["class"].get<std::string>();
    if (rep.ok) {
      ok = false;
      note = m["file"].get<std::string>() + " wrongly accepted";
      break;
    }
    bool found = false;
    for (const auto& d : rep.diags)
      if (!d.ok && d.cls == want) found = true;
    if (!found) {
      ok = false;
      note = m["file"].get<std::string>() + " missing diagnostic " + want;
    }
  }
  report(6, "proof corpus accepted, 10 mutations rejected with expected class",
         ok, note.empty() ? std::to_string(dt) + "s" : note);
}

void criterion7() {
  bool ok = true;
  std::string note;
  WffPtr x = mk_var("x", ty_eps()), y = mk_var("y", ty_eps());
  WffPtr lam1 = mk_abs(x, mk_eval(x, ty_o()));
  WffPtr lam2 = mk_abs(y, mk_eval(y, ty_o()));
  auto n1 = normalize(sig, lam1);
  auto n2 = normalize(sig, lam2);
  if (n1.tag != n2.tag || !n1.wff || !n2.wff || wff_eq(n1.wff, n2.wff)) {
    ok = false;
    note = "renamed abstractions should stay distinct";
  }
  for (int i = 0; i < 200 && ok; i++) {
    WffPtr A = gen_closed(ty_o(), 1 + rnd(4), {});
    WffPtr arg = mk_quote(A);
    auto r1 = normalize(sig, mk_app(lam1, arg));
    auto r2 = normalize(sig, mk_app(lam2, arg));
    if (r1.tag != r2.tag ||
        (r1.tag == NormTag::Value && !wff_eq(r1.wff, r2.wff))) {
      ok = false;
      note = "application disagrees on " + print_wff(A);
    }
  }
  report(7, "no alpha identification, yet beta-equal behavior", ok, note);
}

void criterion8() {
  bool ok = true;
  std::string note;
  for (int i = 0; i < 5000 && ok; i++) {
    WffPtr w = gen_closed(gen_type(1), 1 + rnd(4), {});
    WffPtr con;
    switch (rnd(4)) {
      case 0: con = encode(w); break;
      case 1: con = mk_app(c_quot(), encode(w)); break;
      case 2: con = mk_app(c_cleanse(), encode(w)); break;
      default:
        con = mk_app(c_sub(), encode(mk_var("r", ty_i())),
                     encode(mk_var("s", ty_i())), encode(w));
        break;
    }
    auto r = epsilon_eval(sig, con);
    if (r.tag == PartialResult::Unknown) {
      ok = false;
      note = "unknown on a closed construction";
    }
  }
  for (int i = 0; i < 500 && ok; i++) {
    WffPtr e = mk_var("e" + std::to_string(rnd(5)), ty_eps());
    WffPtr con = mk_app(c_app(), e, encode(gen_closed(ty_i(), rnd(3), {})));
    auto r = epsilon_eval(sig, con);
    if (r.tag != PartialResult::Unknown) {
      ok = false;
      note = "free construction variable should be unknown";
    }
  }
  report(8, "construction evaluation totality and ignorance", ok, note);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  return failures == 0 ? 0 : 1;
}
