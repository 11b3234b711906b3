#pragma once

#include "orbitdeg/exactpoly/bigrat.hpp"

#include <string>
#include <vector>

namespace orbitdeg::exact {

struct PrimePower {
    BigInt prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Prime factorization of n >= 1, primes ascending. Trial division by small
/// primes, then Brent's variant of Pollard rho on what remains.
Factorization factor_integer(const BigInt& n);

BigInt multiply_out(const Factorization& f);

// "2^3*3^3"; "1" for the empty factorization.
std::string format_factorization(const Factorization& f);

} // namespace orbitdeg::exact
