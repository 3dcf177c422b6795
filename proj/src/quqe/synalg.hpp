#pragma once
#include <optional>

#include "ast.hpp"
#include "encode.hpp"
#include "signature.hpp"

namespace quqe {

enum class Tri { True, False, Unknown };
Tri tri_and(Tri a, Tri b);
Tri tri_or(Tri a, Tri b);
Tri tri_not(Tri a);
const char* tri_str(Tri t);

struct PartialResult {
  enum Tag { Defined, Undefined, Unknown } tag;
  WffPtr value;  // decoded wff when Defined
  static PartialResult defined(WffPtr w) { return {Defined, std::move(w)}; }
  static PartialResult undefined() { return {Undefined, nullptr}; }
  static PartialResult unknown() { return {Unknown, nullptr}; }
};

// All operations below work on decoded wffs (the represented syntax). The
// construction-level entry points canonicalize via as_construction first.

bool syn_var_p(const WffPtr& d);    // represented wff is a variable
bool syn_con_p(const Signature& sig, const WffPtr& d);  // a primitive constant
std::optional<TypePtr> wff_type(const WffPtr& d);       // = type_of
bool eval_free_p(const WffPtr& d);  // = is_evaluation_free

// Evaluates an evaluation-free, type-eps wff built from literals, constructor
// constants, conditionals, fst/snd projections, cleanse/sub applications and
// canonical bottoms to the represented construction. Free variables and
// unresolvable tests yield Unknown; non-standard constructions yield Undefined.
PartialResult epsilon_eval(const Signature& sig, const WffPtr& w);

// Spec-directed predicates and transformers over represented syntax.
Tri not_free_in(const Signature& sig, const WffPtr& v, const WffPtr& d);
Tri syn_closed_p(const Signature& sig, const WffPtr& d);
PartialResult cleanse(const Signature& sig, const WffPtr& d);
PartialResult subst(const Signature& sig, const WffPtr& a, const WffPtr& x,
                    const WffPtr& d);

// Truth of a formation/closure formula over eps-wff arguments, used by the
// normalizer and by epsilon_eval for conditional tests. Handles the canonical
// connectives, equality of constructions, and the syntactic predicates.
Tri eval_formula(const Signature& sig, const WffPtr& f);

}  // namespace quqe
