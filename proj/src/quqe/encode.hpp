#pragma once
#include <optional>

#include "ast.hpp"

namespace quqe {

// The encoding E. Atoms map to their quotations; composite wffs map to
// constructor-constant applications over the sub-encodings. An evaluation's
// designated type rides in a canonical type-carrier: E(eval A : t) =
// eval E(A) (quote _ty:t).
WffPtr encode(const WffPtr& w);

// Exact inverse on the image of E. Lenient only in the evaluation type slot
// (any variable name is accepted as the carrier). Requires the decoded tree to
// be a well-formed wff; returns nullopt otherwise.
std::optional<WffPtr> decode(const WffPtr& w);

bool is_literal(const WffPtr& w);

// Canonicalizes an eps-wff that is a quotation or literal into E-form and
// decodes it: Quote(A) is accepted as denoting E(A).
std::optional<WffPtr> as_construction(const WffPtr& w);

}  // namespace quqe
