#pragma once

#include "orbitdeg/exactpoly/bigrat.hpp"

#include <vector>

namespace orbitdeg::pgl2 {

using exact::BigInt;

/// d points on P^1 counted with multiplicity: m_1..m_s >= 1, d = sum m_i.
struct TupleConfig {
    std::vector<long> multiplicities;

    long degree() const;
    BigInt power_sum(unsigned r) const;  // m^(r) = sum m_i^r
};

// Throws InvalidArgument for an empty list or a multiplicity < 1.
void validate(const TupleConfig& cfg);

/// Predegree of the PGL(2)-orbit closure of the tuple: d^3 - 3d m^(2) + 2 m^(3).
BigInt pgl2_predegree(const TupleConfig& cfg);

/// Same count by brute force: a Moebius transformation is pinned down by
/// an ordered triple of distinct support points, so the count is the sum of
/// m_a m_b m_c over ordered triples of pairwise distinct indices.
BigInt pgl2_oracle(const TupleConfig& cfg);

// All partitions of d >= 1, each non-increasing, in reverse lexicographic order.
std::vector<TupleConfig> partitions(int d);

} // namespace orbitdeg::pgl2
