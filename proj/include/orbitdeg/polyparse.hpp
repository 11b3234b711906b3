#pragma once

#include "orbitdeg/exactpoly/multipoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orbitdeg::parse {

// Variables of every plane-curve form, in this order.
const std::vector<std::string>& form_variables();

/// Grammar-level parse of an expression over x, y, z:
///
///   expr    = term { ("+" | "-") term } ;
///   term    = unary { ["*"] unary } ;          juxtaposition multiplies
///   unary   = ("-" | "+") unary | power ;
///   power   = primary [ "^" integer ] ;
///   primary = integer [ "/" integer ] | "x" | "y" | "z" | "(" expr ")" ;
///
/// Whitespace is ignored. A numeric literal may not follow another factor
/// by juxtaposition ("x 2" is rejected; write "2x" or "x*2").
/// Throws ParseError carrying the 0-based offset of the failure.
exact::MultiPoly parse_polynomial(std::string_view text);

struct ParsedForm {
    exact::MultiPoly form;
    int degree;
};

/// parse_polynomial plus validation as a curve input: the result must be
/// nonzero and homogeneous. Throws NonHomogeneous or InvalidArgument.
ParsedForm parse_form(std::string_view text);

} // namespace orbitdeg::parse
