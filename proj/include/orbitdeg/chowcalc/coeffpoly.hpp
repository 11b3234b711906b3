#pragma once

#include "orbitdeg/exactpoly/bigrat.hpp"

#include <map>
#include <string>
#include <utility>

namespace orbitdeg::chow {

using exact::BigInt;

/// Polynomial with integer coefficients in two commuting symbols: the curve
/// degree d and the blow-up index j. Also serves as Z[d] for the symbolic
/// formula identities (j simply never appears there).
class CoeffPoly {
public:
    // (power of d, power of j) -> coefficient; zero coefficients are dropped.
    using TermMap = std::map<std::pair<int, int>, BigInt>;

    CoeffPoly() = default;
    CoeffPoly(long value);  // NOLINT: integers embed implicitly
    CoeffPoly(const BigInt& value);

    static CoeffPoly d();
    static CoeffPoly j();

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int degree_in_d() const;
    int degree_in_j() const;
    BigInt coefficient(int d_power, int j_power = 0) const;

    BigInt evaluate(const BigInt& d_value, const BigInt& j_value = 0) const;
    CoeffPoly substitute_j(const BigInt& j_value) const;

    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly& operator*=(const CoeffPoly& o);
    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    CoeffPoly operator-() const;
    friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

private:
    void add(std::pair<int, int> key, const BigInt& c);
    TermMap terms_;
};

CoeffPoly pow(const CoeffPoly& p, unsigned exponent);

// "d^8 - 1372*d^4 + 7992*d^3 - 15879*d^2 + 10638*d"
std::string to_string(const CoeffPoly& p);

} // namespace orbitdeg::chow
