#include "orbitdeg/exactpoly/factor.hpp"

#include "orbitdeg/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbitdeg::exact {

namespace {

constexpr unsigned long kTrialLimit = 10000;

bool is_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's cycle detection on x -> x^2 + c mod n. Returns a nontrivial
// factor, or n itself when this c fails.
BigInt brent_rho(const BigInt& n, unsigned long c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](BigInt& v) {
        v = v * v + c;
        v %= n;
    };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        do {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                step(y);
                BigInt diff = x - y;
                if (diff < 0) diff = -diff;
                q = (q * diff) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);

    if (g == n) {
        // backtrack one step at a time from the saved position
        do {
            step(ys);
            BigInt diff = x - ys;
            if (diff < 0) diff = -diff;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long c = 1;; ++c) {
        BigInt d = brent_rho(n, c);
        if (d != n && d != 1) {
            split(d, out);
            split(n / d, out);
            return;
        }
    }
}

} // namespace

Factorization factor_integer(const BigInt& n) {
    if (n <= 0) throw InvalidArgument("factor_integer needs n >= 1");
    std::map<BigInt, unsigned> found;
    BigInt rest = n;
    for (unsigned long p = 2; p <= kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++found[BigInt(p)];
            rest /= p;
        }
    }
    if (rest > 1) split(rest, found);

    Factorization out;
    for (const auto& [p, e] : found) out.push_back({p, e});
    return out;
}

BigInt multiply_out(const Factorization& f) {
    BigInt v = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

std::string format_factorization(const Factorization& f) {
    if (f.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << '*';
        os << f[i].prime.get_str();
        if (f[i].exponent > 1) os << '^' << f[i].exponent;
    }
    return os.str();
}

} // namespace orbitdeg::exact
