#include "orbitdeg/pgl2.hpp"

#include "orbitdeg/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace orbitdeg::pgl2 {

long TupleConfig::degree() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0L); }

BigInt TupleConfig::power_sum(unsigned r) const {
    BigInt sum = 0;
    for (long m : multiplicities) {
        BigInt term;
        mpz_pow_ui(term.get_mpz_t(), BigInt(m).get_mpz_t(), r);
        sum += term;
    }
    return sum;
}

void validate(const TupleConfig& cfg) {
    if (cfg.multiplicities.empty()) throw InvalidArgument("multiplicity list is empty");
    for (long m : cfg.multiplicities)
        if (m < 1) throw InvalidArgument("multiplicities must be >= 1, got " + std::to_string(m));
}

BigInt pgl2_predegree(const TupleConfig& cfg) {
    validate(cfg);
    const BigInt d = cfg.degree();
    return d * d * d - 3 * d * cfg.power_sum(2) + 2 * cfg.power_sum(3);
}

BigInt pgl2_oracle(const TupleConfig& cfg) {
    validate(cfg);
    const auto& m = cfg.multiplicities;
    const std::size_t s = m.size();
    BigInt total = 0;
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            for (std::size_t c = 0; c < s; ++c)
                if (a != b && b != c && a != c) total += BigInt(m[a]) * m[b] * m[c];
    return total;
}

namespace {

void extend(long remaining, long largest, std::vector<long>& prefix, std::vector<TupleConfig>& out) {
    if (remaining == 0) {
        out.push_back({prefix});
        return;
    }
    for (long part = std::min(remaining, largest); part >= 1; --part) {
        prefix.push_back(part);
        extend(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<TupleConfig> partitions(int d) {
    if (d < 1) throw InvalidArgument("partitions require d >= 1, got " + std::to_string(d));
    std::vector<TupleConfig> out;
    std::vector<long> prefix;
    extend(d, d, prefix, out);
    return out;
}

} // namespace orbitdeg::pgl2
