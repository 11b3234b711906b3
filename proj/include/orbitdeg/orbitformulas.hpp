#pragma once

#include "orbitdeg/chowcalc/coeffpoly.hpp"
#include "orbitdeg/exactpoly/factor.hpp"
#include "orbitdeg/profile.hpp"

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace orbitdeg::orbit {

using chow::CoeffPoly;
using exact::BigInt;
using exact::BigRat;

// Closed forms shared by the numeric (R = BigInt) and symbolic
// (R = CoeffPoly, i.e. Z[d]) routes. Builtin integers are excluded so that
// calls like flex_contribution(2, 4) reach the checked BigInt overloads.
template <class R>
concept Ring = !std::is_arithmetic_v<R>;

template <Ring R>
R first_correction(const R& d) {
    return d * (R(10) * d - R(9)) * (R(14) * d * d - R(33) * d + R(21));
}

template <Ring R>
R second_correction(const R& d) {
    return d * (R(2) * d - R(3)) * (R(322) * d * d - R(1257) * d + R(1233));
}

template <Ring R>
R third_correction_per_flex(const R& d) {
    return R(196) * d * d - R(960) * d + R(1125);
}

// Correction of the blow-up with index j >= 2, per flex of order > j-2.
template <Ring R>
R higher_correction_per_flex(const R& d, const R& j) {
    const R dm1 = d - R(1);
    return R(30) * j * j * j * j - R(96) * dm1 * j * j * j + R(12) * dm1 * (R(7) * d - R(11)) * j * j +
           R(84) * dm1 * dm1 * j - R(7) * (R(2) * d - R(3)) * (R(22) * d - R(39));
}

// P(d): the predegree when every flex is simple, expanded.
template <Ring R>
R simple_flex_predegree(const R& d) {
    const R d2 = d * d;
    const R d4 = d2 * d2;
    return d4 * d4 - R(1372) * d4 + R(7992) * d2 * d - R(15879) * d2 + R(10638) * d;
}

// Same polynomial in its factored presentation d(d-2)(...).
template <Ring R>
R simple_flex_predegree_factored(const R& d) {
    const R d2 = d * d;
    const R d3 = d2 * d;
    return d * (d - R(2)) *
           (d3 * d3 + R(2) * d3 * d2 + R(4) * d2 * d2 + R(8) * d3 - R(1356) * d2 + R(5280) * d - R(5319));
}

// Term subtracted from P(d) for each point with flex order `order`.
template <Ring R>
R flex_order_term(const R& order, const R& d) {
    const R& r = order;
    return r * (r - R(1)) *
           (R(6) * r * r * r + (R(75) - R(24) * d) * r * r + (R(28) * d * d - R(240) * d + R(393)) * r +
            R(196) * d * d - R(960) * d + R(1125));
}

/// f_k(d): change of the predegree when a flex of order k replaces k
/// simple flexes.
template <Ring R>
R flex_contribution(const R& k, const R& d) {
    return -(k * (k - R(1)) *
             ((R(28) * k + R(196)) * d * d - (R(24) * k * k + R(240) * k + R(960)) * d +
              (R(6) * k * k * k + R(75) * k * k + R(393) * k + R(1125))));
}

// Predegree from d and the flex power sums f^(2..5).
template <Ring R>
R power_sum_predegree(const R& d, const R& f2, const R& f3, const R& f4, const R& f5) {
    const R d2 = d * d;
    const R d4 = d2 * d2;
    return d4 * d4 - R(8) * d * (R(98) * d2 * d - R(492) * d2 + R(843) * d - R(486)) -
           (R(168) * d2 - R(720) * d + R(732)) * f2 - (R(28) * d2 - R(216) * d + R(318)) * f3 -
           (R(69) - R(24) * d) * f4 - R(6) * f5;
}

// Fermat curve x^d + y^d + z^d: 3d flexes of order d-2.
template <Ring R>
R fermat_predegree(const R& d) {
    return simple_flex_predegree<R>(d) + R(3) * d * flex_contribution<R>(d - R(2), d);
}

template <Ring R>
R fermat_closed_form(const R& d) {
    const R d2 = d * d;
    const R d3 = d2 * d;
    return d2 * (d - R(2)) * (d3 * d2 + R(2) * d2 * d2 - R(26) * d3 - R(7) * d2 + R(192) * d - R(192));
}

// Curve x^(d-1)y + y^(d-1)z + z^(d-1)x: three flexes of order d-3, the
// rest simple; its degree is numerator / (3(d^2 - 3d + 3)).
template <Ring R>
R cyclic_numerator(const R& d) {
    return simple_flex_predegree<R>(d) + R(3) * flex_contribution<R>(d - R(3), d);
}

template <Ring R>
R cyclic_denominator(const R& d) {
    return R(3) * (d * d - R(3) * d + R(3));
}

// Three times the cyclic-curve degree.
template <Ring R>
R cyclic_closed_form_times3(const R& d) {
    const R d2 = d * d;
    const R d3 = d2 * d;
    return d3 * d3 + R(3) * d3 * d2 + R(6) * d2 * d2 - R(21) * d3 - R(1354) * d2 + R(5463) * d - R(5508);
}

// Numeric entry points. Profiles are validated (InconsistentProfile).

/// d^8 minus the first two corrections minus, for each flex of order r,
/// the per-flex corrections of the blow-ups j = 2..r+1.
BigInt predegree_by_blowup_sum(const FlexProfile& profile);

/// P(d) minus the per-flex order term, summed over flexes.
BigInt predegree_by_flex_orders(const FlexProfile& profile);

/// Predegree from d and the power sums alone. Throws InvalidArgument for d < 3.
BigInt predegree_by_power_sums(int d, const FlexSums& sums);

BigInt simple_flex_predegree(int d);
CoeffPoly simple_flex_predegree_symbolic();

BigInt flex_contribution(long k, long d);
BigInt fermat_predegree(int d);

/// Degree of the orbit closure of x^(d-1)y + y^(d-1)z + z^(d-1)x, d >= 5.
BigRat cyclic_curve_degree(int d);

/// predegree / aut_order; throws NonDivisible when aut_order does not
/// divide the predegree, InvalidArgument when aut_order < 1.
BigInt orbit_degree(const BigInt& predegree, const BigInt& aut_order);

struct TableRow {
    int d;
    BigInt value;
    exact::Factorization factors;
};

// P(d) with factorizations for d_from..d_to, 3 <= d_from <= d_to.
std::vector<TableRow> table_rows(int d_from, int d_to);

/// Bound on the l.c.m. of automorphism-group orders of smooth degree-d
/// curves with only simple flexes: P(d) with every prime p > d^2 - 3d + 3
/// removed, and p removed for (d, p) in {(4, 5), (6, 17), (10, 59)}.
/// Defined for 3 <= d <= 10.
BigInt aut_lcm_bound(int d);

struct PredegreeReport {
    FlexProfile profile;
    FlexSums sums;
    BigInt by_blowup_sum;
    BigInt by_flex_orders;
    BigInt by_power_sums;
    BigInt by_chow;
    BigInt predegree;
    exact::Factorization factors;
    std::optional<BigInt> aut_order;
    std::optional<BigInt> degree;
};

/// Runs every route; throws MathError if any two disagree, NonDivisible
/// when aut_order is given and does not divide the predegree.
PredegreeReport predegree_report(const FlexProfile& profile, std::optional<BigInt> aut_order = std::nullopt);

struct IdentityCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool holds;
};

/// Polynomial identities in Z[d] / Z[d, j] tying the symbolic Chow-ring
/// computation to the closed forms and the closed forms to each other.
std::vector<IdentityCheck> verify_identities();

} // namespace orbitdeg::orbit
