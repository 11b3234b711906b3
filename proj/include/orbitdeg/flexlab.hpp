#pragma once

#include "orbitdeg/exactpoly/multipoly.hpp"
#include "orbitdeg/profile.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>

namespace orbitdeg::flex {

using Point = std::array<exact::BigRat, 3>;

/// A homogeneous form in x, y, z of degree d >= 3 whose gradient has no
/// projective zero. Only check_smooth constructs one.
class PlaneCurve {
public:
    const exact::MultiPoly& form() const noexcept { return form_; }
    int degree() const noexcept { return degree_; }
    bool smooth() const noexcept { return true; }

private:
    friend PlaneCurve check_smooth(const exact::MultiPoly& form);
    PlaneCurve(exact::MultiPoly form, int degree) : form_(std::move(form)), degree_(degree) {}

    exact::MultiPoly form_;
    int degree_;
};

/// Certifies smoothness exactly. The partials are eliminated by resultants
/// in a chosen chart; a nonconstant gcd of the eliminants is resolved by a
/// splitting gcd over Q[x]/(s), so extraneous factors never produce a false
/// verdict. Throws SingularCurve (with a witness when the singular point is
/// rational), NonHomogeneous, or InvalidArgument for d < 3.
PlaneCurve check_smooth(const exact::MultiPoly& form);

/// r such that the tangent line at q meets C with multiplicity r + 2.
/// Throws InvalidArgument if q is not on C.
int flex_order_at(const PlaneCurve& curve, const Point& q);

// Random integer matrix with determinant +-1, built as a signed permutation
// times unit lower and upper triangular factors with entries in [-bound, bound].
exact::IntMatrix3 random_unimodular(std::mt19937_64& rng, int bound);

struct FlexSearchOptions {
    int initial_bound = 3;
    int retry_budget = 8;
};

/// Multiset of flex orders of C. Under a random unimodular change the
/// resultant Res_y(F, Hess F) in the chart z = 1 has a root of multiplicity
/// r for each flex of order r; a change is accepted when the resultant has
/// full degree 3d(d-2) and a second independent change reproduces the same
/// multiplicity profile. Deterministic given the seed.
/// Throws GenericityFailure once the retry budget is spent.
FlexProfile flex_profile(const PlaneCurve& curve, std::uint64_t seed, const FlexSearchOptions& options = {});

// Profile read off under one fixed coordinate change, or nullopt when the
// change is visibly degenerate (curve through (0:1:0), short resultant,
// or a multiplicity above d-2).
std::optional<FlexProfile> profile_under_change(const PlaneCurve& curve, const exact::IntMatrix3& change);

} // namespace orbitdeg::flex
