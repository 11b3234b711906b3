#include "orbitdeg/orbitformulas.hpp"

#include "orbitdeg/chowcalc/stages.hpp"

namespace orbitdeg::orbit {

namespace {

// p(d, j) with j replaced by q(d, j).
CoeffPoly compose_j(const CoeffPoly& p, const CoeffPoly& q) {
    CoeffPoly out;
    for (const auto& [key, c] : p.terms())
        out += CoeffPoly(c) * pow(CoeffPoly::d(), key.first) * pow(q, key.second);
    return out;
}

IdentityCheck check(std::string name, const CoeffPoly& lhs, const CoeffPoly& rhs) {
    return {std::move(name), to_string(lhs), to_string(rhs), lhs == rhs};
}

} // namespace

std::vector<IdentityCheck> verify_identities() {
    const auto& chow = chow::chow_corrections();
    const CoeffPoly d = CoeffPoly::d();
    // the index j doubles as the order r of a single symbolic flex
    const CoeffPoly r = CoeffPoly::j();
    const CoeffPoly one(1);
    const CoeffPoly flexes = CoeffPoly(3) * d * (d - CoeffPoly(2));
    const CoeffPoly p = simple_flex_predegree<CoeffPoly>(d);

    std::vector<IdentityCheck> out;
    out.push_back(check("first blow-up correction", chow.first, first_correction(d)));
    out.push_back(check("second blow-up correction", chow.second, second_correction(d)));
    out.push_back(check("simple-flex blow-up correction", chow.third_per_flex, third_correction_per_flex(d)));
    out.push_back(check("higher blow-up correction (quartic in j)", chow.higher_per_flex,
                        higher_correction_per_flex(d, r)));
    out.push_back(check("higher correction at j = 2 is the simple-flex correction",
                        chow.higher_per_flex.substitute_j(2), chow.third_per_flex));

    // Per-flex j-sum for a flex of order r, sum_{j=2}^{r+1}, against the
    // flex-order form r * (simple-flex term) + term(r): base case and step.
    const auto per_flex = [&](const CoeffPoly& order) {
        return order * chow.third_per_flex + flex_order_term(order, d);
    };
    out.push_back(check("blow-up sum for a simple flex", per_flex(one), chow.higher_per_flex.substitute_j(2)));
    out.push_back(check("blow-up sum step from order r-1 to r", per_flex(r) - per_flex(r - one),
                        compose_j(chow.higher_per_flex, r + one)));
    out.push_back(check("blow-up sum assembly, all flexes simple",
                        pow(d, 8) - chow.first - chow.second - flexes * chow.third_per_flex, p));
    out.push_back(check("simple-flex predegree, factored form", p, simple_flex_predegree_factored(d)));

    // One flex of order r, the rest simple: flex-order form vs power sums.
    const CoeffPoly rest = flexes - r;
    out.push_back(check("flex-order form vs power-sum form", p - flex_order_term(r, d),
                        power_sum_predegree(d, pow(r, 2) + rest, pow(r, 3) + rest, pow(r, 4) + rest,
                                            pow(r, 5) + rest)));
    out.push_back(check("flex contribution is the negated flex-order term", flex_contribution(r, d),
                        -flex_order_term(r, d)));
    out.push_back(check("order-2 flex contribution", flex_contribution(CoeffPoly(2), d),
                        CoeffPoly(-6) * (CoeffPoly(84) * d * d - CoeffPoly(512) * d + CoeffPoly(753))));
    out.push_back(check("order-3 flex contribution", flex_contribution(CoeffPoly(3), d),
                        CoeffPoly(-6) * (CoeffPoly(280) * d * d - CoeffPoly(1896) * d + CoeffPoly(3141))));
    out.push_back(check("Fermat curve predegree", fermat_predegree<CoeffPoly>(d), fermat_closed_form(d)));
    // (P + 3 f_{d-3}) / (3(d^2-3d+3)) = (1/3)(...), cleared of denominators
    out.push_back(check("cyclic curve degree", cyclic_numerator<CoeffPoly>(d),
                        (d * d - CoeffPoly(3) * d + CoeffPoly(3)) * cyclic_closed_form_times3(d)));
    return out;
}

} // namespace orbitdeg::orbit
