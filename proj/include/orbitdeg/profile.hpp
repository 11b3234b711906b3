#pragma once

#include "orbitdeg/exactpoly/bigrat.hpp"

#include <map>

namespace orbitdeg {

/// Multiset of flex orders of a smooth plane curve of degree d, counted
/// over the algebraic closure: counts[r] is the number of flexes of order r.
/// Orders with zero count are not stored.
struct FlexProfile {
    int degree = 0;
    std::map<int, long long> counts;

    long long weighted_total() const;

    friend bool operator==(const FlexProfile&, const FlexProfile&) = default;
};

// Throws InconsistentProfile unless d >= 3, every order lies in
// [1, d-2], counts are positive, and the weighted total is 3d(d-2).
void validate_profile(const FlexProfile& profile);

// All 3d(d-2) flexes simple.
FlexProfile all_simple_profile(int degree);

/// f^(r) = sum over flexes of order^r, r = 2..5.
struct FlexSums {
    exact::BigInt f2, f3, f4, f5;

    friend bool operator==(const FlexSums&, const FlexSums&) = default;
};

FlexSums f_sums(const FlexProfile& profile);

} // namespace orbitdeg
