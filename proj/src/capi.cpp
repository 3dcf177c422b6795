// C shim over the kernel; see include/quqe.h for the status contract.
#include "../include/quqe.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "quqe/kernel.hpp"
#include "quqe/normalize.hpp"
#include "quqe/synalg.hpp"
#include "quqe/text.hpp"

using namespace quqe;
using nlohmann::json;

struct quqe_theory {
  Theory th;
  long fuel = 100000;
  bool raw = false;
};

namespace {

char* dup_str(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void set_out(char** slot, const std::string& s) {
  if (slot) *slot = dup_str(s);
}

void clear(char** out, char** err) {
  if (out) *out = nullptr;
  if (err) *err = nullptr;
}

int fail(char** err, const std::string& msg) {
  set_out(err, msg);
  return 3;
}

WffPtr parse_or_throw(const quqe_theory* th, const char* text) {
  if (!text) throw ParseError("null input");
  return parse_checked(text, th->th.sig);
}

std::string prt(const quqe_theory* th, const WffPtr& w) {
  return th->raw ? print_wff_raw(w) : print_wff(w);
}

template <typename F>
int guarded(char** err, F f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return fail(err, e.what());
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

}  // namespace

int quqe_theory_create(quqe_theory** out, char** err) {
  clear(nullptr, err);
  if (!out) return fail(err, "null output handle");
  *out = new quqe_theory();
  return 0;
}

int quqe_theory_load_text(const char* text, quqe_theory** out, char** err) {
  clear(nullptr, err);
  if (!out || !text) return fail(err, "null argument");
  std::string msg;
  auto th = parse_theory(text, &msg);
  if (!th) return fail(err, msg);
  *out = new quqe_theory{{std::move(*th)}};
  return 0;
}

int quqe_theory_load_file(const char* path, quqe_theory** out, char** err) {
  clear(nullptr, err);
  if (!out || !path) return fail(err, "null argument");
  std::string msg;
  auto th = load_theory_file(path, &msg);
  if (!th) return fail(err, msg);
  *out = new quqe_theory{{std::move(*th)}};
  return 0;
}

void quqe_theory_free(quqe_theory* th) { delete th; }
void quqe_string_free(char* s) { std::free(s); }

void quqe_set_fuel(quqe_theory* th, long fuel) {
  if (th && fuel > 0) th->fuel = fuel;
}

void quqe_set_expand_sugar(quqe_theory* th, int expand) {
  if (th) th->raw = expand != 0;
}

int quqe_check_wff(const quqe_theory* th, const char* wff, char** out,
                   char** err) {
  clear(out, err);
  return guarded(err, [&] {
    set_out(out, prt(th, parse_or_throw(th, wff)));
    return 0;
  });
}

int quqe_typecheck(const quqe_theory* th, const char* wff, char** out,
                   char** err) {
  clear(out, err);
  return guarded(err, [&] {
    auto w = parse_or_throw(th, wff);
    auto t = type_of(w);
    if (!t) return fail(err, "ill-typed wff");
    set_out(out, ty_str(*t));
    return 0;
  });
}

int quqe_normalize(const quqe_theory* th, const char* wff, char** out,
                   char** err) {
  clear(out, err);
  return guarded(err, [&] {
    auto r = normalize(th->th.sig, parse_or_throw(th, wff),
                       static_cast<int>(th->fuel));
    switch (r.tag) {
      case NormTag::Value:
        set_out(out, prt(th, r.wff));
        return 0;
      case NormTag::Bottom:
        set_out(out, "bottom");
        return 1;
      case NormTag::Stuck:
        set_out(out, prt(th, r.wff));
        return 2;
      case NormTag::Fuel:
        set_out(out, "fuel exhausted");
        return 2;
    }
    return 3;
  });
}

int quqe_quote(const quqe_theory* th, const char* wff, char** out, char** err) {
  clear(out, err);
  return guarded(err, [&] {
    set_out(out, prt(th, encode(parse_or_throw(th, wff))));
    return 0;
  });
}

int quqe_eval(const quqe_theory* th, const char* wff, char** out, char** err) {
  clear(out, err);
  return guarded(err, [&] {
    auto w = parse_or_throw(th, wff);
    auto t = type_of(w);
    if (!t || (*t)->kind != TyKind::Epsilon)
      return fail(err, "eval expects a wff of type eps");
    auto r = epsilon_eval(th->th.sig, w);
    switch (r.tag) {
      case PartialResult::Defined:
        set_out(out, prt(th, r.value));
        return 0;
      case PartialResult::Undefined:
        return 1;
      case PartialResult::Unknown:
        return 2;
    }
    return 3;
  });
}

int quqe_sub(const quqe_theory* th, const char* a, const char* x, const char* d,
             char** out, char** err) {
  clear(out, err);
  return guarded(err, [&] {
    auto xa = parse_or_throw(th, x);
    if (xa->kind != WKind::Var) return fail(err, "second argument must be a variable");
    auto r = subst(th->th.sig, parse_or_throw(th, a), xa, parse_or_throw(th, d));
    switch (r.tag) {
      case PartialResult::Defined:
        set_out(out, prt(th, r.value));
        return 0;
      case PartialResult::Undefined:
        return 1;
      case PartialResult::Unknown:
        return 2;
    }
    return 3;
  });
}

int quqe_cleanse(const quqe_theory* th, const char* d, char** out, char** err) {
  clear(out, err);
  return guarded(err, [&] {
    auto r = cleanse(th->th.sig, parse_or_throw(th, d));
    switch (r.tag) {
      case PartialResult::Defined:
        set_out(out, prt(th, r.value));
        return 0;
      case PartialResult::Undefined:
        return 1;
      case PartialResult::Unknown:
        return 2;
    }
    return 3;
  });
}

int quqe_not_free_in(const quqe_theory* th, const char* x, const char* d,
                     char** err) {
  clear(nullptr, err);
  return guarded(err, [&] {
    auto xa = parse_or_throw(th, x);
    if (xa->kind != WKind::Var) return fail(err, "first argument must be a variable");
    switch (not_free_in(th->th.sig, xa, parse_or_throw(th, d))) {
      case Tri::True:
        return 0;
      case Tri::False:
        return 1;
      case Tri::Unknown:
        return 2;
    }
    return 3;
  });
}

int quqe_taut(const quqe_theory* th, const char* wff, char** err) {
  clear(nullptr, err);
  return guarded(err, [&] {
    std::string msg;
    auto r = taut_check(parse_or_throw(th, wff), &msg);
    if (!r) return 2;
    return *r ? 0 : 1;
  });
}

namespace {

int report_json(const CheckReport& rep, char** out) {
  json diags = json::array();
  for (const auto& d : rep.diags)
    diags.push_back({{"line", d.number},
                     {"ok", d.ok},
                     {"class", d.cls},
                     {"message", d.msg}});
  json j = {{"ok", rep.ok},
            {"lines", rep.lines},
            {"primitive_steps", rep.primitive_steps},
            {"diagnostics", diags}};
  set_out(out, j.dump(2));
  return rep.ok ? 0 : 1;
}

}  // namespace

int quqe_check_proof_text(const quqe_theory* th, const char* text, char** out,
                          char** err) {
  clear(out, err);
  if (!text) return fail(err, "null argument");
  return guarded(err,
                 [&] { return report_json(check_proof_text(th->th, text), out); });
}

int quqe_check_proof_file(const quqe_theory* th, const char* path, char** out,
                          char** err) {
  clear(out, err);
  if (!path) return fail(err, "null argument");
  return guarded(err,
                 [&] { return report_json(check_proof_file(th->th, path), out); });
}
