#pragma once

#include "orbitdeg/chowcalc/graded.hpp"
#include "orbitdeg/profile.hpp"

#include <string>
#include <vector>

namespace orbitdeg::chow {

/// Centers of the successive blow-ups resolving the orbit map of a smooth
/// plane curve C inside P^8:
///   B   dual plane x C (dim 3)
///   B1  P^1-bundle over B (dim 4)
///   B2  one component per flex, a P^1-bundle over the dual plane (dim 3)
///   Bj  one component per flex of order > j-2, j >= 3, a P^1-bundle over
///       the B2 component (dim 4); the index j stays symbolic.
enum class Stage { B, B1, B2, Bj };

inline constexpr Stage kAllStages[] = {Stage::B, Stage::B1, Stage::B2, Stage::Bj};

/// Intersection data of one blow-up center.
struct CenterSpec {
    Stage stage;
    std::string name;
    int dimension;
    // Pullback of the point-condition class to the center.
    GradedClass point_class;
    // Total Chern class of the normal bundle, as a product of factors.
    std::vector<ClassFactor> normal_chern;
};

CenterSpec center_spec(Stage stage);

/// images[i] is the pushforward of fiber^i to the base of the bundle.
/// Stage B is not a bundle and has no table.
struct PushforwardTable {
    Gen fiber;
    int base_dimension;
    std::vector<GradedClass> images;
};

PushforwardTable pushforward_table(Stage stage);

/// One projection step: B1 -> B, B2 -> dual plane, Bj -> B2. Base classes
/// pass through by the projection formula; fiber powers go through the
/// table. Throws std::logic_error for a power beyond the table.
GradedClass pushforward(const GradedClass& c, Stage stage);

/// Degree of c on the center: pushes forward down the tower, then
/// evaluates on B (k^2 h = d, other cubic monomials 0) or on the plane
/// (k^2 = 1).
CoeffPoly integrate(const GradedClass& c, Stage stage);

/// Integral over the center of (1 + point class)^8 / c(normal bundle),
/// the subtraction in the blow-up intersection formula. Per flex for B2
/// and Bj; in Z[d] except Bj, which lies in Z[d, j].
CoeffPoly correction_integral(Stage stage);

struct ChowCorrections {
    CoeffPoly first;            // stage B
    CoeffPoly second;           // stage B1
    CoeffPoly third_per_flex;   // stage B2
    CoeffPoly higher_per_flex;  // stage Bj, symbolic j
};

// Computed once (the four stages in parallel) and cached.
const ChowCorrections& chow_corrections();

/// d^8 minus all correction integrals for a concrete profile: each flex of
/// order r contributes the B2 term once and the Bj term for j = 3..r+1.
/// Throws InconsistentProfile.
BigInt predegree_via_chow(const FlexProfile& profile);

// Symbolic predegree in Z[d] when all 3d(d-2) flexes are simple.
CoeffPoly predegree_via_chow_all_simple();

} // namespace orbitdeg::chow
