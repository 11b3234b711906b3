#pragma once

#include "orbitdeg/exactpoly/bigrat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orbitdeg::exact {

/// Dense univariate polynomial over Q, lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty storage).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRat> coefficients);

    static UniPoly monomial(const BigRat& c, int degree);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<BigRat>& coefficients() const noexcept { return c_; }
    BigRat coefficient(int i) const;
    const BigRat& leading() const;

    BigRat evaluate(const BigRat& x) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const BigRat& s);
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void trim();
    std::vector<BigRat> c_;
};

UniPoly derivative(const UniPoly& p);
UniPoly monic(const UniPoly& p);

// Quotient and remainder of Euclidean division; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

// Monic gcd (zero only when both inputs are zero). Runs a primitive
// remainder sequence over Z to keep coefficients small.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Integer polynomial with the same roots: denominators cleared, content
// removed, positive leading coefficient.
UniPoly primitive_part(const UniPoly& p);

// Squarefree part of p (monic); p must be nonzero.
UniPoly squarefree_part(const UniPoly& p);

struct SquarefreeFactor {
    int multiplicity;
    UniPoly factor;  // monic, squarefree, positive degree
};

/// Yun's algorithm. p = lc(p) * prod factor^multiplicity, factors pairwise
/// coprime, multiplicities strictly increasing. Throws on p == 0.
std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& p);

std::string to_string(const UniPoly& p, const std::string& var = "t");

} // namespace orbitdeg::exact
