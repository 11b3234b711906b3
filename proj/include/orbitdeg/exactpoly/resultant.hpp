#pragma once

#include "orbitdeg/exactpoly/multipoly.hpp"
#include "orbitdeg/exactpoly/unipoly.hpp"

#include <string_view>
#include <vector>

namespace orbitdeg::exact {

// Coefficients of p as a polynomial in `var`: out[i] multiplies var^i.
// Each coefficient keeps p's variable list with var's exponent zero.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::string_view var);

// p must involve no variable other than `var`.
UniPoly to_unipoly(const MultiPoly& p, std::string_view var);
MultiPoly from_unipoly(const UniPoly& p, const std::vector<std::string>& variables, std::string_view var);

// Fraction-free Gaussian elimination; the input matrix is consumed.
BigInt determinant_bareiss(std::vector<std::vector<BigInt>> m);

/// Res_var(f, g): determinant of the Sylvester matrix with deg_var(g) rows
/// of f's coefficients first, then deg_var(f) rows of g's. Throws
/// InvalidArgument when either input is zero.
///
/// Serial reference: Bareiss elimination directly on polynomial entries.
MultiPoly resultant_bareiss(const MultiPoly& f, const MultiPoly& g, std::string_view var);

/// Same value, computed by evaluating the Sylvester matrix at integer points
/// of the single remaining variable and interpolating. Evaluations run in
/// parallel (OpenMP); the output is bit-identical to resultant_bareiss.
/// Throws InvalidArgument when f and g involve more than one variable
/// besides `var`.
MultiPoly resultant_interpolated(const MultiPoly& f, const MultiPoly& g, std::string_view var);

// Uses the interpolation path when at most one other variable appears.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var);

// Resultant of two univariate polynomials.
BigRat resultant(const UniPoly& f, const UniPoly& g);

} // namespace orbitdeg::exact
