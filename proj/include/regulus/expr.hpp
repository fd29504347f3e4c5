#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regulus/axial.hpp"
#include "regulus/quat.hpp"

namespace regulus::expr {

// Text DSL for the closed function class. Grammar (EBNF):
//
//   expr   := term { ("+" | "-") term } ;
//   term   := factor { "*" factor } ;
//   factor := base [ "^" integer ] ;
//   base   := "q" | real-literal | "exp" "(" expr ")"
//           | "recip" "(" expr ")" | "(" expr ")" ;
//
// "^" binds tighter than "*", which binds tighter than "+"/"-"; "+", "-"
// and "*" associate to the left. An exponent attaches to a single base
// ("q^2^3" is rejected); exponent integers may be negative. Composition is
// written by nesting: "exp(q^2)" is the exponential after the square.
// Real literals are unsigned, in decimal or scientific notation; "q" is
// the only variable.
//
// Failures raise SyntaxError (with byte offset and expected-token set) or
// ArityError (for a malformed call such as "exp()" or "exp(q, q)").
axial::RegularFn parse(std::string_view src);

// Canonical text for a tree. For every tree the grammar can express, the
// printed form re-parses to a structurally identical tree; trees only
// constructible through the API (a bare Scale node, a composition whose
// outer function has no call syntax) print as a semantically equal
// canonical form instead.
std::string print(const axial::RegularFn& f);

// Parser for the quaternion report form "a + b i + c j + d k" (i, j, k are
// e2, e3, e4). Accepts any signed sequence of real and unit terms.
Quaternion parse_quaternion(std::string_view src);

// One parsed entry of a corpus file: expressions one per line, blank lines
// and '#' comments skipped.
struct CorpusEntry {
    std::size_t line;  // 1-based
    std::string text;
    axial::RegularFn fn;
};

// Parse a whole corpus. `provenance` names the source (a file path) and is
// prefixed, with the line number, onto any parse error message.
std::vector<CorpusEntry> parse_corpus(std::string_view src, std::string_view provenance);

}  // namespace regulus::expr
