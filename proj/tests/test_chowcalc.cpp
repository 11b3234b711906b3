#include "doctest.h"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include "orbitdeg/chowcalc/stages.hpp"
#include "orbitdeg/error.hpp"

using namespace orbitdeg;
using namespace orbitdeg::chow;
using Rng = orbitdeg::testing::Gen;

namespace {

const CoeffPoly D = CoeffPoly::d();
const CoeffPoly J = CoeffPoly::j();

GradedClass one(int t) { return GradedClass::scalar(1, t); }
GradedClass K(int t) { return GradedClass::generator(Gen::k, t); }
GradedClass H(int t) { return GradedClass::generator(Gen::h, t); }
GradedClass E(int t) { return GradedClass::generator(Gen::e, t); }
GradedClass F(int t) { return GradedClass::generator(Gen::f, t); }

CoeffPoly poly_d(std::initializer_list<long> high_first) {
    CoeffPoly p;
    for (long c : high_first) p = p * D + CoeffPoly(c);
    return p;
}

// Drop monomials that vanish for dimension reasons on B = dual plane x C.
GradedClass on_base_b(const GradedClass& c) {
    GradedClass out(c.truncation());
    for (const auto& [m, coeff] : c.terms())
        if (m[0] <= 2 && m[1] <= 1) out.add_term(m, coeff);
    return out;
}

GradedClass random_unit(Rng& rng, int t) {
    GradedClass u = one(t);
    const GradedClass gens[] = {K(t), H(t), E(t), F(t)};
    for (int i = 0; i < 5; ++i) {
        GradedClass mono = one(t);
        const long deg = rng.uniform(1, t);
        for (long k = 0; k < deg; ++k) mono = mono * gens[rng.uniform(0, 3)];
        u += CoeffPoly(rng.integer(4)) * D * mono + CoeffPoly(rng.integer(3)) * mono;
    }
    return u;
}

} // namespace

TEST_SUITE("chowcalc: coefficient ring") {
    TEST_CASE("arithmetic and evaluation") {
        const CoeffPoly p = (D - CoeffPoly(1)) * (D + CoeffPoly(1));
        CHECK(p == D * D - CoeffPoly(1));
        CHECK(p.evaluate(5) == 24);
        CHECK((J * D).evaluate(3, 4) == 12);
        CHECK((J * J + D).substitute_j(2) == D + CoeffPoly(4));
        CHECK(to_string(poly_d({1, 0, -2, 3})) == "d^3 - 2*d + 3");
        CHECK(to_string(CoeffPoly()) == "0");
        CHECK(pow(D + J, 2) == D * D + CoeffPoly(2) * D * J + J * J);
    }
}

TEST_SUITE("chowcalc: truncated expansion") {
    TEST_CASE("geometric series") {
        const int t = 3;
        const ClassFactor f[] = {{one(t) + K(t), -1}};
        CHECK(expand_truncated(f, t) == one(t) - K(t) + K(t) * K(t) - K(t) * K(t) * K(t));
    }

    TEST_CASE("a unit times its inverse is one") {
        const int t = 3;
        const GradedClass u = one(t) + D * H(t);
        CHECK(u * inverse(u) == one(t));
        Rng rng(9);
        for (int i = 0; i < 30; ++i) {
            const GradedClass v = random_unit(rng, 4);
            CHECK(v * inverse(v) == one(4));
            const ClassFactor pair[] = {{v, 2}, {v, -2}};
            CHECK(expand_truncated(pair, 4) == one(4));
        }
    }

    TEST_CASE("non-units are rejected") {
        CHECK_THROWS_AS(inverse(K(3)), InvalidArgument);
        CHECK_THROWS_AS(inverse(GradedClass::scalar(2, 3) + K(3)), InvalidArgument);
    }

    TEST_CASE("first correction by hand-assembled expansion") {
        const int t = 3;
        const auto k = K(t), h = H(t);
        const ClassFactor f[] = {{one(t) + D * k + D * h, 8}, {one(t) + k, 3},         {one(t) + h, 3},
                                 {one(t) + k + h, -9},        {one(t) + D * h, -1}};
        const GradedClass top = expand_truncated(f, t).part(3);
        CHECK(top.coefficient({2, 1, 0, 0}) * D == D * (CoeffPoly(10) * D - CoeffPoly(9)) * poly_d({14, -33, 21}));
    }
}

TEST_SUITE("chowcalc: pushforward") {
    TEST_CASE("table entries and projection formula examples") {
        const GradedClass e2 = E(4) * E(4);
        CHECK(pushforward(e2, Stage::B1) == GradedClass::scalar(-3, 3) * K(3) + (CoeffPoly(2) * D - CoeffPoly(6)) * H(3));
        CHECK(pushforward(K(4) * E(4), Stage::B1) == -K(3));
        CHECK(pushforward(F(4) * F(4), Stage::Bj) == -E(3));
        CHECK(pushforward(one(4), Stage::B1).is_zero());
        CHECK(pushforward(one(3), Stage::B2).is_zero());
        CHECK(pushforward(one(4), Stage::Bj).is_zero());
        CHECK_THROWS_AS(pushforward_table(Stage::B), std::logic_error);
    }

    TEST_CASE("tables agree with Segre classes of the bundles") {
        // B1 = P(Q/TB) over B: c(Q/TB)^{-1} = c(T/Q) / c(N_B)
        {
            const int t = 3;
            const auto k = K(t), h = H(t);
            const ClassFactor s[] = {{one(t) + k + D * h, 3}, {one(t) + k, 3}, {one(t) + h, 3}, {one(t) + k + h, -9},
                                     {one(t) + D * h, -1}};
            const auto expected = testing::pushforward_from_segre(on_base_b(expand_truncated(s, t)), 4);
            const auto table = pushforward_table(Stage::B1);
            REQUIRE(table.images.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i) CHECK(table.images[i] == expected[i]);
        }
        // B2 component: h restricts to 0 on the fiber over a flex
        {
            const int t = 2;
            const ClassFactor s[] = {{one(t) + K(t), -3}};
            const auto expected = testing::pushforward_from_segre(expand_truncated(s, t), 3);
            const auto table = pushforward_table(Stage::B2);
            for (std::size_t i = 0; i < expected.size(); ++i) CHECK(table.images[i] == expected[i]);
        }
        // Bj = P(L + O) over B2 with c(L + O)^{-1} = 1/(1+e)
        {
            const int t = 3;
            const ClassFactor s[] = {{one(t) + E(t), -1}};
            const auto expected = testing::pushforward_from_segre(expand_truncated(s, t), 4);
            const auto table = pushforward_table(Stage::Bj);
            for (std::size_t i = 0; i < expected.size(); ++i) CHECK(table.images[i] == expected[i]);
        }
    }

    TEST_CASE("pushforward is linear over base classes") {
        const GradedClass base_monos[] = {one(4), K(4), H(4), K(4) * H(4), K(4) * K(4)};
        for (int i = 0; i <= 4; ++i) {
            GradedClass ei = one(4);
            for (int p = 0; p < i; ++p) ei = ei * E(4);
            const GradedClass pe = pushforward(ei, Stage::B1);
            for (const auto& b : base_monos) {
                if (degree(b.terms().begin()->first) + i > 4) continue;
                CHECK(pushforward(b * ei, Stage::B1) == b.truncated(3) * pe);
            }
        }
    }
}

TEST_SUITE("chowcalc: correction integrals") {
    TEST_CASE("closed forms") {
        CHECK(correction_integral(Stage::B) == D * (CoeffPoly(10) * D - CoeffPoly(9)) * poly_d({14, -33, 21}));
        CHECK(correction_integral(Stage::B1) == D * (CoeffPoly(2) * D - CoeffPoly(3)) * poly_d({322, -1257, 1233}));
        CHECK(correction_integral(Stage::B2) == poly_d({196, -960, 1125}));
        const CoeffPoly dm1 = D - CoeffPoly(1);
        const CoeffPoly quartic = CoeffPoly(30) * pow(J, 4) - CoeffPoly(96) * dm1 * pow(J, 3) +
                                  CoeffPoly(12) * dm1 * (CoeffPoly(7) * D - CoeffPoly(11)) * pow(J, 2) +
                                  CoeffPoly(84) * dm1 * dm1 * J -
                                  CoeffPoly(7) * (CoeffPoly(2) * D - CoeffPoly(3)) * (CoeffPoly(22) * D - CoeffPoly(39));
        CHECK(correction_integral(Stage::Bj) == quartic);
    }

    TEST_CASE("the j = 2 integrand reduces to the simple-flex integral") {
        const auto& c = chow_corrections();
        CHECK(c.higher_per_flex.substitute_j(2) == c.third_per_flex);
    }

    TEST_CASE("spot values") {
        const auto& c = chow_corrections();
        CHECK(c.first.evaluate(3) == 3024);
        CHECK(c.first.evaluate(4) == 14012);
        CHECK(c.second.evaluate(3) == 3240);
        CHECK(c.second.evaluate(4) == 27140);
        CHECK(c.third_per_flex.evaluate(3) == 9);
        CHECK(c.third_per_flex.evaluate(4) == 421);
        CHECK(BigInt(6561) - 3024 - 3240 - 9 * 9 == 216);
        CHECK(BigInt(65536) - 14012 - 27140 - 24 * 421 == 14280);
    }

    TEST_CASE("predegree assembly") {
        CHECK(predegree_via_chow({4, {{1, 24}}}) == 14280);
        CHECK(predegree_via_chow({3, {{1, 9}}}) == 216);
        CHECK(predegree_via_chow({4, {{2, 12}}}) == 10752);
        CHECK(predegree_via_chow_all_simple() == pow(D, 8) - CoeffPoly(1372) * pow(D, 4) + CoeffPoly(7992) * pow(D, 3) -
                                                     CoeffPoly(15879) * D * D + CoeffPoly(10638) * D);
        CHECK_THROWS_AS(predegree_via_chow({4, {{1, 20}}}), InconsistentProfile);
    }

    TEST_CASE("center data") {
        CHECK(center_spec(Stage::B).dimension == 3);
        CHECK(center_spec(Stage::B1).dimension == 4);
        CHECK(center_spec(Stage::B2).dimension == 3);
        CHECK(center_spec(Stage::Bj).dimension == 4);
        CHECK(center_spec(Stage::B2).point_class == D * K(3) - GradedClass::scalar(2, 3) * E(3));
    }
}
