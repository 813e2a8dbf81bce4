#ifndef GOLDBACH_PARSE_HPP
#define GOLDBACH_PARSE_HPP

#include "goldbach/polynomial.hpp"

#include <string>
#include <vector>

namespace goldbach {

/// Parses an expression over the declared variables into canonical form.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := NUMBER | VAR ('^' INT)? | '(' expr ')' | '-' factor
///   NUMBER := INT ('/' INT)?
///
/// Whitespace is insignificant. Integer literals (and exponents) have
/// arbitrary precision; the optional '/' part makes printed rational
/// coefficients re-parseable. Formatting a polynomial and parsing it back is
/// the identity.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars, FieldSpec field);

}  // namespace goldbach

#endif
