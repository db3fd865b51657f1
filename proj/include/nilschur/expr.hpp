#pragma once

#include <string>
#include <vector>

#include "nilschur/grassmann.hpp"
#include "nilschur/isomorphism.hpp"
#include "nilschur/nilhecke.hpp"
#include "nilschur/sympoly.hpp"

namespace nilschur {

/// Evaluates an expression over the given algebra.  Grammar:
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | '(' expr ')' | INT | 'y' INT ['^' INT]
///           | 'psi' '[' INT (',' INT)* ']'
///
/// Integer literals may be arbitrarily large; whitespace separates tokens
/// freely.  A psi word is evaluated letter by letter, so an unreduced word
/// may legitimately come out zero.  Throws ExprError with a byte offset on
/// malformed text and on generator indices outside the algebra's range.
NilHeckeElement parse_element(const NilHeckeAlgebra& algebra, const std::string& text);

/// Parses "(0,1)", "0,1" or "()" into the listed integers.  Accepts optional
/// surrounding parentheses and whitespace; throws ExprError on anything else.
std::vector<int> parse_int_tuple(const std::string& text);

/// Canonical text form, e.g. "psi[1]*y2^2 - y1 - y2": terms in
/// canonical_term_before order, psi factors as bracketed reduced words,
/// unit coefficients suppressed.  parse_element inverts this exactly.
std::string to_text(const NilHeckeElement& x);

/// "(0,2) + (1,1)": Schubert labels in ascending (degree, entries) order.
std::string to_text(const CohomologyClass& x);

/// "s(2) + s(1,1)": shapes ordered by size then reverse-lexicographic.
std::string to_text(const SchurExpansion& x);

std::string to_text(const IntPolynomial& f);
std::string to_text(const BasicAlgebraElement& x);

} // namespace nilschur
