#pragma once

#include "orbitdeg/exactpoly/bigrat.hpp"

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitdeg::exact {

using Exponents = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic on the
// exponent vector (first variable most significant).
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded-lex order, so the last entry of terms() is the
/// leading term. Zero coefficients are never stored; the zero polynomial
/// has an empty term map and total_degree() == kZeroDegree.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, BigRat, GrlexLess>;

    static constexpr int kZeroDegree = -1;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables);

    static MultiPoly constant(std::vector<std::string> variables, const BigRat& value);
    static MultiPoly variable(std::vector<std::string> variables, std::string_view name);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t num_variables() const noexcept { return vars_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    // Index of `name` in variables(); throws VariableMismatch if absent.
    std::size_t index_of(std::string_view name) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;

    // Coefficient of the monomial with exponents `e` (zero if absent).
    BigRat coefficient(const Exponents& e) const;
    const BigRat& leading_coefficient() const;
    const Exponents& leading_exponents() const;

    // Adds c * monomial(e); keeps the no-zero-coefficient invariant.
    void add_term(const Exponents& e, const BigRat& c);

    BigRat evaluate(std::span<const BigRat> point) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const BigRat& s);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const BigRat& s) { return a *= s; }
    friend MultiPoly operator*(const BigRat& s, MultiPoly a) { return a *= s; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    void require_same_variables(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);

// Formal partial derivative with respect to `var`.
MultiPoly differentiate(const MultiPoly& p, std::string_view var);

// Exact quotient a / b; throws InvalidArgument when b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

// Sets variable `var` to the given value (the variable stays in the list
// with exponent 0 everywhere).
MultiPoly specialize(const MultiPoly& p, std::string_view var, const BigRat& value);

using IntMatrix3 = std::array<std::array<BigInt, 3>, 3>;

BigInt determinant(const IntMatrix3& m);
IntMatrix3 adjugate(const IntMatrix3& m);
IntMatrix3 identity_matrix3();

/// Composes p(x, y, z) with the linear map v -> M v, i.e. substitutes
/// x_i -> sum_j M[i][j] x_j. The first three variables of p are used.
MultiPoly linear_substitute(const MultiPoly& p, const IntMatrix3& m);

/// det of the 3x3 matrix of second partials of F in its three variables.
/// Homogeneous of degree 3(d-2), or zero.
MultiPoly hessian_determinant(const MultiPoly& f);

// Canonical printer: descending graded-lex order, "2*x^3*y - 1/2*z^4".
std::string to_string(const MultiPoly& p);

} // namespace orbitdeg::exact
