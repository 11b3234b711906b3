#include "orbitdeg/chowcalc/coeffpoly.hpp"

#include <algorithm>
#include <sstream>

namespace orbitdeg::chow {

CoeffPoly::CoeffPoly(long value) : CoeffPoly(BigInt(value)) {}

CoeffPoly::CoeffPoly(const BigInt& value) {
    if (value != 0) terms_[{0, 0}] = value;
}

CoeffPoly CoeffPoly::d() {
    CoeffPoly p;
    p.terms_[{1, 0}] = 1;
    return p;
}

CoeffPoly CoeffPoly::j() {
    CoeffPoly p;
    p.terms_[{0, 1}] = 1;
    return p;
}

int CoeffPoly::degree_in_d() const {
    int best = -1;
    for (const auto& [k, c] : terms_) best = std::max(best, k.first);
    return best;
}

int CoeffPoly::degree_in_j() const {
    int best = -1;
    for (const auto& [k, c] : terms_) best = std::max(best, k.second);
    return best;
}

BigInt CoeffPoly::coefficient(int d_power, int j_power) const {
    auto it = terms_.find({d_power, j_power});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void CoeffPoly::add(std::pair<int, int> key, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt CoeffPoly::evaluate(const BigInt& d_value, const BigInt& j_value) const {
    BigInt sum = 0;
    for (const auto& [k, c] : terms_) {
        BigInt t = c, pd, pj;
        mpz_pow_ui(pd.get_mpz_t(), d_value.get_mpz_t(), static_cast<unsigned long>(k.first));
        mpz_pow_ui(pj.get_mpz_t(), j_value.get_mpz_t(), static_cast<unsigned long>(k.second));
        sum += t * pd * pj;
    }
    return sum;
}

CoeffPoly CoeffPoly::substitute_j(const BigInt& j_value) const {
    CoeffPoly out;
    for (const auto& [k, c] : terms_) {
        BigInt pj;
        mpz_pow_ui(pj.get_mpz_t(), j_value.get_mpz_t(), static_cast<unsigned long>(k.second));
        out.add({k.first, 0}, c * pj);
    }
    return out;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) { return *this = *this * o; }

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

CoeffPoly pow(const CoeffPoly& p, unsigned exponent) {
    CoeffPoly result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= p;
    return result;
}

std::string to_string(const CoeffPoly& p) {
    if (p.is_zero()) return "0";
    // descending in d, then in j
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool is_const = k.first == 0 && k.second == 0;
        bool wrote = false;
        if (mag != 1 || is_const) {
            os << mag.get_str();
            wrote = true;
        }
        if (k.first > 0) {
            os << (wrote ? "*" : "") << 'd';
            if (k.first > 1) os << '^' << k.first;
            wrote = true;
        }
        if (k.second > 0) {
            os << (wrote ? "*" : "") << 'j';
            if (k.second > 1) os << '^' << k.second;
        }
    }
    return os.str();
}

} // namespace orbitdeg::chow
