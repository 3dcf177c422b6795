#pragma once
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quqe {

// ---------- types ----------

enum class TyKind { Iota, Omicron, Epsilon, Fun, Pair };

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  TyKind kind;
  TypePtr a;  // Fun: result, Pair: first component
  TypePtr b;  // Fun: argument, Pair: second component
};

TypePtr ty_i();
TypePtr ty_o();
TypePtr ty_eps();
TypePtr ty_fun(TypePtr result, TypePtr arg);
TypePtr ty_pair(TypePtr first, TypePtr second);
// fn type taking args left to right: fn(r,{a,b}) applied to a then b yields r
TypePtr ty_fn(TypePtr result, std::vector<TypePtr> args);

bool ty_eq(const TypePtr& s, const TypePtr& t);
std::string ty_str(const TypePtr& t);     // grammar form: i, o, eps, (r a), <a,b>
std::string ty_mangle(const TypePtr& t);  // compact prefix code for constant names
std::optional<TypePtr> ty_demangle(const std::string& s);

// ---------- wffs ----------

enum class WKind { Var, Const, App, Abs, Cond, Quote, Eval };

struct Wff;
using WffPtr = std::shared_ptr<const Wff>;

struct Wff {
  WKind kind;
  std::string name;  // Var, Const
  TypePtr ty;        // Var/Const: the type; Eval: designated result type
  WffPtr a;          // App: function, Abs: binder (a Var), Cond: test, Quote/Eval: body
  WffPtr b;          // App: argument, Abs: body, Cond: then-branch
  WffPtr c;          // Cond: else-branch
};

WffPtr mk_var(std::string name, TypePtr ty);
WffPtr mk_const(std::string name, TypePtr ty);
WffPtr mk_app(WffPtr fn, WffPtr arg);
WffPtr mk_app(WffPtr fn, WffPtr a1, WffPtr a2);
WffPtr mk_app(WffPtr fn, WffPtr a1, WffPtr a2, WffPtr a3);
WffPtr mk_abs(WffPtr binder, WffPtr body);
WffPtr mk_cond(WffPtr test, WffPtr thenb, WffPtr elseb);
WffPtr mk_quote(WffPtr body);
WffPtr mk_eval(WffPtr body, TypePtr ty);

bool wff_eq(const WffPtr& u, const WffPtr& v);  // structural, names included

// Type of a wff; nullopt when ill-formed (application mismatch, binder not a
// variable, branch mismatch, non-o test, non-eps evaluation argument).
std::optional<TypePtr> type_of(const WffPtr& w);
// First formation error as a human-readable message with a path, or nullopt.
std::optional<std::string> formation_error(const WffPtr& w);

std::size_t wff_size(const WffPtr& w);  // Var+Const leaves, including under Quote
// complexity: (#Eval nodes not inside a Quote, size), compared lexicographically
std::pair<std::size_t, std::size_t> wff_complexity(const WffPtr& w);

bool is_evaluation_free(const WffPtr& w);  // no Eval outside Quote bodies

// Free variables (standard binding; Quote bodies contribute nothing; an Eval
// body's free variables are free). Used by the surface checker, not by the
// not-free-in predicate (which has its own clauses).
std::vector<WffPtr> free_vars_surface(const WffPtr& w);
// Every variable leaf anywhere, Quote bodies included, binders included.
std::vector<WffPtr> all_vars(const WffPtr& w);
bool var_occurs(const WffPtr& v, const WffPtr& w);  // any leaf equal to v

// Occurrence paths: child selectors from the root.
enum class Sel { Fn, Arg, Binder, Body, Test, Then, Else, QBody, EBody };
using Path = std::vector<Sel>;
std::optional<WffPtr> subterm_at(const WffPtr& w, const Path& p);
std::optional<WffPtr> replace_at(const WffPtr& w, const Path& p, const WffPtr& r);
std::string path_str(const Path& p);
std::optional<Path> parse_path(const std::string& s);

}  // namespace quqe
