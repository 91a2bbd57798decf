#pragma once

#include <string_view>
#include <vector>

#include "jacring/polynomial.hpp"

namespace jacring {

/// Parses the polynomial grammar
///   POLY   := ['+'|'-'] TERM (('+'|'-') TERM)*
///   TERM   := ATOM ('*' ATOM)*
///   ATOM   := INT | VAR ['^' INT] | '(' POLY ')' ['^' INT]
///   VAR    := 'x' INT
/// over the rationals. Whitespace is ignored. Throws ParseError with the
/// offending position, or NotHomogeneous when `require_homogeneous` is set.
Polynomial<RationalField> parse_rational_polynomial(std::string_view text,
                                                    const Grading& grading,
                                                    bool require_homogeneous = false);

/// Same grammar with the extra symbol `t`, returned as variable index
/// grading.num_vars() of a ring with one more (weight one) variable.
Polynomial<RationalField> parse_parametric_polynomial(std::string_view text,
                                                      const Grading& grading);

/// Comma separated list of polynomials.
std::vector<Polynomial<RationalField>> parse_polynomial_list(std::string_view text,
                                                             const Grading& grading);

template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, const Ring<Field>& ring,
                                   bool require_homogeneous = false) {
  return convert(parse_rational_polynomial(text, ring.grading, require_homogeneous),
                 ring.field);
}

/// "3", "-7/2".
mpq_class parse_rational(std::string_view text);

}  // namespace jacring
