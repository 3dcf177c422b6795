#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ast.hpp"

namespace quqe {

// Logical constant families. A (name, type) pair is logical when it matches one
// of the fixed schemas below; the wff-hood family carries its type parameter
// mangled into the name ("wff^" + code).
bool is_logical_const(const std::string& name, const TypePtr& ty);

// Canonical logical constants.
WffPtr c_Q(const TypePtr& alpha);            // equality at alpha
WffPtr c_iota(const TypePtr& alpha);         // description, alpha != o
WffPtr c_pair(const TypePtr& a, const TypePtr& b);
WffPtr c_var();                              // variable-hood
WffPtr c_con();                              // constant-hood
WffPtr c_app();
WffPtr c_abs();
WffPtr c_cond();
WffPtr c_quot();
WffPtr c_eval();
WffPtr c_evalfree();                         // eval-free
WffPtr c_nfi();                              // not-free-in
WffPtr c_cleanse();
WffPtr c_sub();
WffPtr c_wff(const TypePtr& alpha);          // wff-hood at alpha
// If the constant is a wff-hood constant, its type parameter.
std::optional<TypePtr> wff_pred_param(const WffPtr& cst);

// Whether a constant wff is a constructor constant (app/abs/cond/quot/eval).
bool is_constructor_const(const WffPtr& cst);

struct Def {
  std::string name;
  TypePtr ty;
  WffPtr body;  // fully expanded, closed
};

enum class TheoryMode { EvalFree, General };

struct Signature {
  std::map<std::string, TypePtr> nonlogical;  // declared constants
  std::map<std::string, Def> defs;            // abbreviations, expanded eagerly
  std::vector<std::string> def_order;

  bool declare(const std::string& name, const TypePtr& ty, std::string* err);
  bool define(const std::string& name, const TypePtr& ty, const WffPtr& body,
              std::string* err);
  // Constant lookup used by the parser for `#name:TYPE`.
  // Returns: a Const wff for logical/declared constants, the expanded body for defs.
  std::optional<WffPtr> resolve_const(const std::string& name, const TypePtr& ty) const;
};

// A constant is primitive when it is logical or declared (not an abbreviation).
bool is_primitive_const(const Signature& sig, const WffPtr& w);
// Checks every Const leaf of w is primitive w.r.t. sig; returns first bad name.
std::optional<std::string> unknown_const(const Signature& sig, const WffPtr& w);

}  // namespace quqe
