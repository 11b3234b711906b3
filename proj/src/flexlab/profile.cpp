#include "orbitdeg/profile.hpp"

#include "orbitdeg/error.hpp"

#include <string>

namespace orbitdeg {

long long FlexProfile::weighted_total() const {
    long long total = 0;
    for (const auto& [order, count] : counts) total += static_cast<long long>(order) * count;
    return total;
}

void validate_profile(const FlexProfile& profile) {
    const long long d = profile.degree;
    if (d < 3) throw InconsistentProfile("flex profile needs degree d >= 3, got " + std::to_string(d));
    for (const auto& [order, count] : profile.counts) {
        if (order < 1 || order > d - 2)
            throw InconsistentProfile("flex order " + std::to_string(order) + " outside [1, d-2] for d = " +
                                      std::to_string(d));
        if (count <= 0) throw InconsistentProfile("flex counts must be positive");
    }
    const long long expected = 3 * d * (d - 2);
    if (profile.weighted_total() != expected)
        throw InconsistentProfile("weighted flex count " + std::to_string(profile.weighted_total()) +
                                  " differs from 3d(d-2) = " + std::to_string(expected));
}

FlexProfile all_simple_profile(int degree) {
    FlexProfile p;
    p.degree = degree;
    p.counts[1] = 3LL * degree * (degree - 2);
    return p;
}

FlexSums f_sums(const FlexProfile& profile) {
    FlexSums s{0, 0, 0, 0};
    for (const auto& [order, count] : profile.counts) {
        const exact::BigInt r = order;
        const exact::BigInt c = static_cast<long>(count);
        exact::BigInt p = r * r * c;
        s.f2 += p;
        p *= r;
        s.f3 += p;
        p *= r;
        s.f4 += p;
        p *= r;
        s.f5 += p;
    }
    return s;
}

} // namespace orbitdeg
