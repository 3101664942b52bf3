/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstddef>
#include <string_view>

#include "ipart/hahn.hpp"

namespace ipart {

struct ParseOptions {
  std::size_t rank = 1;
  CoeffField coeff_field = CoeffField::Algebraic;
};

/*
 * parse_expr. Grammar:
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := '-' factor | base ('^' exponent)?
 *   base   := integer | 'alg(' poly ',' rational ',' rational ')' | 'sqrt(' expr ')'
 *           | 't' | 't'<idx> | '(' expr ')'
 * Rational exponents are accepted on variables only; other bases take integer
 * exponents. Throws SyntaxError, UnsupportedExponent, UnknownVariable.
 */
HahnElem parse_expr(std::string_view text, const ParseOptions& options = {});

/* Integer-coefficient polynomial in x, e.g. "x^2-2". */
UPoly parse_upoly(std::string_view text);

/* Signed rational literal "p" or "p/q". */
mpq_class parse_rational(std::string_view text);

}  // namespace ipart
