#pragma once

#include "orbitdeg/chowcalc/coeffpoly.hpp"

#include <array>
#include <map>
#include <span>
#include <string>

namespace orbitdeg::chow {

// Degree-one generators. k and h are the hyperplane classes of the dual
// plane and the plane; e is the first exceptional class (also standing for
// its pullback to later centers), f the class of the fourth and all later
// exceptional divisors restricted to their centers.
enum class Gen { k = 0, h = 1, e = 2, f = 3 };

using Monomial = std::array<int, 4>;

int degree(const Monomial& m);

/// Element of Z[d, j][k, h, e, f] truncated above a fixed total degree.
/// Terms of degree > truncation() are discarded on every operation.
class GradedClass {
public:
    using TermMap = std::map<Monomial, CoeffPoly>;

    explicit GradedClass(int truncation);

    static GradedClass scalar(const CoeffPoly& c, int truncation);
    static GradedClass generator(Gen g, int truncation);

    int truncation() const noexcept { return truncation_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    CoeffPoly coefficient(const Monomial& m) const;
    CoeffPoly constant_term() const { return coefficient({0, 0, 0, 0}); }

    void add_term(const Monomial& m, const CoeffPoly& c);

    // Homogeneous component of the given degree.
    GradedClass part(int degree) const;
    GradedClass truncated(int truncation) const;

    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator*(const CoeffPoly& s, const GradedClass& a);
    GradedClass operator-() const;
    friend bool operator==(const GradedClass&, const GradedClass&) = default;

private:
    int truncation_;
    TermMap terms_;
};

GradedClass pow(const GradedClass& u, unsigned exponent);

/// 1/u by the geometric series; u must have constant term exactly 1.
/// Throws InvalidArgument otherwise.
GradedClass inverse(const GradedClass& u);

// One factor of a formal product: base^exponent, negative exponents
// being quotients.
struct ClassFactor {
    GradedClass base;
    int exponent;
};

/// Expands prod base_i^exponent_i in the ring truncated at `truncation`.
GradedClass expand_truncated(std::span<const ClassFactor> factors, int truncation);

std::string to_string(const GradedClass& c);

} // namespace orbitdeg::chow
