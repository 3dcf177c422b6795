#pragma once
#include <stdexcept>
#include <string>

#include "ast.hpp"
#include "signature.hpp"

namespace quqe {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Throws ParseError on malformed input. Parsing eliminates all surface
// notation: the result is a plain wff over the logical constants plus the
// signature's declared constants (definitions are expanded eagerly).
TypePtr parse_type(const std::string& text);
WffPtr parse_wff(const std::string& text, const Signature& sig);

// Faithful printer with greedy re-sugaring; parse(print(w)) == w. The raw
// variant prints the kernel structure with no abbreviation; it reparses too.
std::string print_type(const TypePtr& t);
std::string print_wff(const WffPtr& w);
std::string print_wff_raw(const WffPtr& w);

// Parses, then validates formation and constants; throws ParseError with a
// located message on failure.
WffPtr parse_checked(const std::string& text, const Signature& sig);

}  // namespace quqe
