#pragma once

#include <gmpxx.h>

#include <string>

namespace orbitdeg::exact {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Reduced fraction num/den; throws InvalidArgument when den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

} // namespace orbitdeg::exact
