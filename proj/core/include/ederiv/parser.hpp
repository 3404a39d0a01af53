#ifndef EDERIV_PARSER_HPP
#define EDERIV_PARSER_HPP

#include <string>

#include "ederiv/polynomial.hpp"

namespace ederiv {

/// Parses the polynomial expression grammar:
///
///   expr    := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-'? base ('^' natural)?
///   base    := variable | scalar-literal | '(' expr ')'
///   variable := 'x' positive-integer        (x1 .. xn)
///   scalar-literal := rational | rational? 'z' ('^' integer)?
///   rational := natural ('/' natural)?
///
/// `z` denotes the primitive N-th root of unity of the session conductor;
/// whitespace is insignificant. Errors carry line and column.
Polynomial parse_polynomial(const std::string& src, const RingPtr& ring);

/// Parses a constant expression (no variables) into a Scalar.
Scalar parse_scalar(const std::string& src, const FieldPtr& field);

}  // namespace ederiv

#endif
