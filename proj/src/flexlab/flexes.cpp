#include "orbitdeg/flexlab.hpp"

#include "orbitdeg/error.hpp"
#include "orbitdeg/exactpoly/resultant.hpp"
#include "orbitdeg/exactpoly/unipoly.hpp"

namespace orbitdeg::flex {

namespace {

using exact::BigRat;
using exact::IntMatrix3;
using exact::MultiPoly;
using exact::UniPoly;

// F(q + t w) as a polynomial in t.
UniPoly restrict_to_line(const MultiPoly& f, const Point& q, const Point& w) {
    std::array<UniPoly, 3> lin;
    for (int i = 0; i < 3; ++i) lin[i] = UniPoly({q[i], w[i]});
    UniPoly out;
    for (const auto& [e, c] : f.terms()) {
        UniPoly t({c});
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * lin[i];
        out += t;
    }
    return out;
}

bool parallel(const Point& a, const Point& b) {
    return a[1] * b[2] - a[2] * b[1] == 0 && a[2] * b[0] - a[0] * b[2] == 0 && a[0] * b[1] - a[1] * b[0] == 0;
}

} // namespace

int flex_order_at(const PlaneCurve& curve, const Point& q) {
    const MultiPoly& f = curve.form();
    if (q[0] == 0 && q[1] == 0 && q[2] == 0) throw InvalidArgument("(0:0:0) is not a projective point");
    if (f.evaluate(q) != 0) throw InvalidArgument("point is not on the curve");

    Point tangent;
    for (int i = 0; i < 3; ++i) tangent[i] = exact::differentiate(f, f.variables()[i]).evaluate(q);
    if (tangent[0] == 0 && tangent[1] == 0 && tangent[2] == 0)
        throw SingularCurve("curve is singular at the given point");

    // Two vectors spanning the tangent line's kernel; one of them is
    // independent of q.
    int pivot = 0;
    while (tangent[pivot] == 0) ++pivot;
    const int a = (pivot + 1) % 3, b = (pivot + 2) % 3;
    Point k1{}, k2{};
    k1[pivot] = -tangent[a];
    k1[a] = tangent[pivot];
    k1[b] = 0;
    k2[pivot] = -tangent[b];
    k2[a] = 0;
    k2[b] = tangent[pivot];
    const Point& w = parallel(k1, q) ? k2 : k1;

    const UniPoly g = restrict_to_line(f, q, w);
    if (g.is_zero()) throw InvalidArgument("tangent line is a component of the curve");
    int order = 0;
    while (g.coefficient(order) == 0) ++order;
    return order - 2;
}

std::optional<FlexProfile> profile_under_change(const PlaneCurve& curve, const IntMatrix3& change) {
    const int d = curve.degree();
    const MultiPoly moved = exact::linear_substitute(curve.form(), change);
    if (moved.coefficient({0, d, 0}) == 0) return std::nullopt;

    const MultiPoly hessian = exact::hessian_determinant(moved);
    const MultiPoly f = exact::specialize(moved, "z", 1);
    const MultiPoly h = exact::specialize(hessian, "z", 1);
    const UniPoly res = exact::to_unipoly(exact::resultant(f, h, "y"), "x");
    if (res.degree() != 3 * d * (d - 2)) return std::nullopt;

    FlexProfile profile;
    profile.degree = d;
    for (const auto& [multiplicity, factor] : exact::squarefree_decompose(res)) {
        if (multiplicity > d - 2) return std::nullopt;
        profile.counts[multiplicity] += factor.degree();
    }
    return profile;
}

FlexProfile flex_profile(const PlaneCurve& curve, std::uint64_t seed, const FlexSearchOptions& options) {
    std::mt19937_64 rng(seed);
    int bound = options.initial_bound;
    for (int round = 0; round <= options.retry_budget; ++round, bound *= 2) {
        const auto first = profile_under_change(curve, random_unimodular(rng, bound));
        const auto second = profile_under_change(curve, random_unimodular(rng, bound));
        if (first && second && *first == *second) return *first;
    }
    throw GenericityFailure("flex profile not reproduced by independent coordinate changes within " +
                            std::to_string(options.retry_budget) + " retries");
}

} // namespace orbitdeg::flex
