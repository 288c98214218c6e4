#pragma once

#include <string>
#include <string_view>

#include "qsenum/hilbert.hpp"
#include "qsenum/ideal.hpp"
#include "qsenum/term.hpp"

namespace qsenum {

// Terms print as x<i>^<e> factors joined by '*', highest variable first; the
// unit term is "1". Ideals print as "(g1, g2, ...)".
std::string to_string(const Term& t);
std::string to_string(const MonomialIdeal& ideal);

// Parsers are whitespace-insensitive and throw ErrorKind::ParseError with the
// byte offset of the problem.
Term parse_term(std::string_view text, RingSpec ring);
MonomialIdeal parse_ideal(std::string_view text, RingSpec ring);

/// Expression in z over the integers with + - * / ^ and parentheses; division
/// only by non-zero constants, exponents are non-negative integer literals.
HilbertPolynomial parse_hilbert(std::string_view text);

}  // namespace qsenum
