#pragma once
#include <optional>

#include "ast.hpp"

namespace quqe {

// Reserved expansion binders %0, %1, %2 (never written by users).
WffPtr res_var(int i, const TypePtr& ty);

// Canonical expansions of the defined notations. All produce plain wffs over
// the logical constants; abbreviation elimination happens at construction time.
WffPtr mk_eq(const WffPtr& a, const WffPtr& b);       // Q a b, same type
WffPtr mk_true();                                      // Q_ooo = Q_ooo
WffPtr mk_false();                                     // [\x:o T] = [\x:o x]
WffPtr and_w();                                        // the conjunction combinator
WffPtr or_w();
WffPtr implies_w();
WffPtr not_w();
WffPtr mk_and(const WffPtr& a, const WffPtr& b);
WffPtr mk_or(const WffPtr& a, const WffPtr& b);
WffPtr mk_implies(const WffPtr& a, const WffPtr& b);
WffPtr mk_not(const WffPtr& a);
WffPtr mk_forall(const WffPtr& x, const WffPtr& body);
WffPtr mk_exists(const WffPtr& x, const WffPtr& body);
WffPtr mk_exists1(const WffPtr& x, const WffPtr& body);
WffPtr mk_neq(const WffPtr& a, const WffPtr& b);
WffPtr mk_defined(const WffPtr& a);                    // a = a
WffPtr mk_undefined(const WffPtr& a);                  // ~(a = a)
WffPtr mk_quasi(const WffPtr& a, const WffPtr& b);     // [a! | b!] => a = b
WffPtr mk_desc(const WffPtr& x, const WffPtr& body);   // iota [\x body], type != o
WffPtr mk_bottom(const TypePtr& ty);                   // F at o, desc x (x /= x) else
WffPtr mk_fst(const TypePtr& a, const TypePtr& b);
WffPtr mk_snd(const TypePtr& a, const TypePtr& b);
WffPtr mk_varpred(const TypePtr& alpha);               // \x [var x & wff^alpha x]
WffPtr mk_conpred(const TypePtr& alpha);
WffPtr mk_evalfreepred(const TypePtr& alpha);
WffPtr mk_synclosed();                                 // \x forall y [var y => nfi y x]

// Recognizers (exact inverses of the expansions above).
struct Bin { WffPtr a, b; };
bool is_true(const WffPtr& w);
bool is_false(const WffPtr& w);
std::optional<Bin> match_eq(const WffPtr& w);
std::optional<Bin> match_and(const WffPtr& w);
std::optional<Bin> match_or(const WffPtr& w);
std::optional<Bin> match_implies(const WffPtr& w);
std::optional<WffPtr> match_not(const WffPtr& w);
std::optional<Bin> match_forall(const WffPtr& w);      // a = binder var, b = body
std::optional<Bin> match_exists(const WffPtr& w);
std::optional<Bin> match_exists1(const WffPtr& w);
std::optional<WffPtr> match_defined(const WffPtr& w);
std::optional<WffPtr> match_undefined(const WffPtr& w);
std::optional<Bin> match_quasi(const WffPtr& w);
std::optional<Bin> match_desc(const WffPtr& w);
bool is_bottom(const WffPtr& w);                       // matches mk_bottom(type)
std::optional<std::pair<TypePtr, TypePtr>> match_fst(const WffPtr& w);
std::optional<std::pair<TypePtr, TypePtr>> match_snd(const WffPtr& w);
bool is_synclosed_head(const WffPtr& w);

}  // namespace quqe
