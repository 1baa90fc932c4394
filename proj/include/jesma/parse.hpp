#ifndef JESMA_PARSE_HPP
#define JESMA_PARSE_HPP

#include "jesma/polynomial.hpp"

#include <string>
#include <string_view>

namespace jesma {

/// Parses a polynomial in t over Q(i).
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' INT)?
///   atom   := INT ('/' INT)? | 't' | 'i' | '(' expr ')'
///
/// Whitespace is ignored. Implicit multiplication ("2t") is a syntax error.
/// Throws ParseError with code SyntaxError, or NonPolynomial for a negative
/// exponent.
Polynomial parse_poly(std::string_view src);

/// Canonical descending-degree text, e.g. "t^2 - 1", "1/2*t + i",
/// "(1 + 2*i)*t^3 - 3*i*t". parse_poly(print_poly(p)) == p.
std::string print_poly(const Polynomial& p);

} // namespace jesma

#endif
