#include "orbitdeg/orbitformulas.hpp"

#include "orbitdeg/chowcalc/stages.hpp"
#include "orbitdeg/error.hpp"

#include <string>

namespace orbitdeg::orbit {

namespace {

void require_degree(int d, int minimum, const char* what) {
    if (d < minimum)
        throw InvalidArgument(std::string(what) + " requires d >= " + std::to_string(minimum) + ", got d = " +
                              std::to_string(d));
}

BigInt count_of(long long c) { return BigInt(static_cast<long>(c)); }

} // namespace

BigInt predegree_by_blowup_sum(const FlexProfile& profile) {
    validate_profile(profile);
    const BigInt d = profile.degree;
    BigInt d8;
    mpz_pow_ui(d8.get_mpz_t(), d.get_mpz_t(), 8);
    BigInt result = d8 - first_correction<BigInt>(d) - second_correction<BigInt>(d);
    // the j = 2 term is the simple-flex integral; every flex has order > 0
    for (const auto& [order, count] : profile.counts) {
        BigInt per_flex = 0;
        for (int j = 2; j <= order + 1; ++j) per_flex += higher_correction_per_flex<BigInt>(d, BigInt(j));
        result -= count_of(count) * per_flex;
    }
    return result;
}

BigInt predegree_by_flex_orders(const FlexProfile& profile) {
    validate_profile(profile);
    const BigInt d = profile.degree;
    BigInt result = simple_flex_predegree<BigInt>(d);
    for (const auto& [order, count] : profile.counts) result -= count_of(count) * flex_order_term<BigInt>(BigInt(order), d);
    return result;
}

BigInt predegree_by_power_sums(int d, const FlexSums& s) {
    require_degree(d, 3, "predegree from power sums");
    return power_sum_predegree<BigInt>(BigInt(d), s.f2, s.f3, s.f4, s.f5);
}

BigInt simple_flex_predegree(int d) {
    require_degree(d, 3, "simple-flex predegree");
    return simple_flex_predegree<BigInt>(BigInt(d));
}

CoeffPoly simple_flex_predegree_symbolic() { return simple_flex_predegree<CoeffPoly>(CoeffPoly::d()); }

BigInt flex_contribution(long k, long d) {
    if (k < 0) throw InvalidArgument("flex contribution requires k >= 0, got k = " + std::to_string(k));
    return flex_contribution<BigInt>(BigInt(k), BigInt(d));
}

BigInt fermat_predegree(int d) {
    require_degree(d, 3, "Fermat predegree");
    return fermat_predegree<BigInt>(BigInt(d));
}

BigRat cyclic_curve_degree(int d) {
    require_degree(d, 5, "cyclic-curve degree");
    BigRat out(cyclic_numerator<BigInt>(BigInt(d)), cyclic_denominator<BigInt>(BigInt(d)));
    out.canonicalize();
    return out;
}

BigInt orbit_degree(const BigInt& predegree, const BigInt& aut_order) {
    if (aut_order < 1) throw InvalidArgument("automorphism order must be >= 1, got " + aut_order.get_str());
    if (predegree % aut_order != 0)
        throw NonDivisible("automorphism order " + aut_order.get_str() + " does not divide predegree " +
                           predegree.get_str());
    return predegree / aut_order;
}

std::vector<TableRow> table_rows(int d_from, int d_to) {
    if (d_from < 3 || d_to < d_from)
        throw InvalidArgument("table range requires 3 <= from <= to, got from = " + std::to_string(d_from) +
                              ", to = " + std::to_string(d_to));
    std::vector<TableRow> rows;
    for (int d = d_from; d <= d_to; ++d) {
        BigInt value = simple_flex_predegree(d);
        rows.push_back({d, value, exact::factor_integer(value)});
    }
    return rows;
}

BigInt aut_lcm_bound(int d) {
    if (d < 3 || d > 10)
        throw InvalidArgument("automorphism bound is defined for 3 <= d <= 10, got d = " + std::to_string(d));
    // Hurwitz-formula exclusions worked out by hand
    static constexpr int kExcluded[][2] = {{4, 5}, {6, 17}, {10, 59}};
    const long cap = static_cast<long>(d) * d - 3L * d + 3;
    exact::Factorization kept;
    for (const auto& pp : exact::factor_integer(simple_flex_predegree(d))) {
        if (pp.prime > cap) continue;
        bool excluded = false;
        for (const auto& ex : kExcluded)
            if (ex[0] == d && pp.prime == ex[1]) excluded = true;
        if (!excluded) kept.push_back(pp);
    }
    return exact::multiply_out(kept);
}

PredegreeReport predegree_report(const FlexProfile& profile, std::optional<BigInt> aut_order) {
    validate_profile(profile);
    PredegreeReport r;
    r.profile = profile;
    r.sums = f_sums(profile);
    r.by_blowup_sum = predegree_by_blowup_sum(profile);
    r.by_flex_orders = predegree_by_flex_orders(profile);
    r.by_power_sums = predegree_by_power_sums(profile.degree, r.sums);
    r.by_chow = chow::predegree_via_chow(profile);
    if (r.by_flex_orders != r.by_blowup_sum || r.by_power_sums != r.by_blowup_sum || r.by_chow != r.by_blowup_sum)
        throw MathError("predegree routes disagree: blow-up sum " + r.by_blowup_sum.get_str() + ", flex orders " +
                        r.by_flex_orders.get_str() + ", power sums " + r.by_power_sums.get_str() + ", Chow ring " +
                        r.by_chow.get_str());
    r.predegree = r.by_blowup_sum;
    // a valid profile never gives a nonpositive value; leave factors empty if one does
    if (r.predegree > 0) r.factors = exact::factor_integer(r.predegree);
    if (aut_order) {
        r.degree = orbit_degree(r.predegree, *aut_order);
        r.aut_order = aut_order;
    }
    return r;
}

} // namespace orbitdeg::orbit
