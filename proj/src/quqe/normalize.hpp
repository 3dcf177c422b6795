#pragma once
#include <optional>
#include <string>

#include "ast.hpp"
#include "signature.hpp"
#include "synalg.hpp"

namespace quqe {

enum class NormTag { Value, Bottom, Stuck, Fuel };

struct NormResult {
  NormTag tag;
  WffPtr wff;
  long steps;
};

// Leftmost-outermost reduction with inert quotation bodies. Catalogue:
// quotation canonicalization, beta (structural rules, then substitution when
// the argument's definedness is established), conditional resolution,
// evaluation of literal constructions, strictness propagation of bottoms,
// syntactic predicates and cleanse/sub on literal arguments, pair projections,
// and reflexive equality of defined terms.
NormResult normalize(const Signature& sig, const WffPtr& w, long fuel = 100000);

// Shallow definedness verdict used by rewrite guards.
Tri is_defined(const Signature& sig, const WffPtr& w);

// Equality of constructions (quotations and literals compare via decoding).
std::optional<bool> literal_equal(const WffPtr& a, const WffPtr& b);

// Two-valued propositional validity of the connective skeleton; atoms are
// maximal non-connective subformulas keyed by structural equality.
// Returns nullopt (with *err set) when the skeleton has too many atoms.
std::optional<bool> taut_check(const WffPtr& w, std::string* err);

}  // namespace quqe
