#include "orbitdeg/chowcalc/stages.hpp"

#include <stdexcept>

namespace orbitdeg::chow {

namespace {

GradedClass gen(Gen g, int t) { return GradedClass::generator(g, t); }
GradedClass one(int t) { return GradedClass::scalar(1, t); }
GradedClass sc(const CoeffPoly& c, int t) { return GradedClass::scalar(c, t); }

const CoeffPoly kD = CoeffPoly::d();
const CoeffPoly kJ = CoeffPoly::j();

Stage base_stage_of_bj() { return Stage::B2; }

} // namespace

CenterSpec center_spec(Stage stage) {
    switch (stage) {
    case Stage::B: {
        const int t = 3;
        const auto k = gen(Gen::k, t), h = gen(Gen::h, t);
        return {stage,
                "B",
                t,
                kD * k + kD * h,
                {{one(t) + k + h, 9}, {one(t) + kD * h, 1}, {one(t) + k, -3}, {one(t) + h, -3}}};
    }
    case Stage::B1: {
        const int t = 4;
        const auto k = gen(Gen::k, t), h = gen(Gen::h, t), e = gen(Gen::e, t);
        return {stage, "B1", t, kD * k + kD * h - e, {{one(t) + e, 1}, {one(t) + k + kD * h - e, 3}}};
    }
    case Stage::B2: {
        const int t = 3;
        const auto k = gen(Gen::k, t), e = gen(Gen::e, t);
        return {stage, "B2", t, kD * k - sc(2, t) * e, {{one(t) + e, 1}, {one(t) + k - sc(2, t) * e, 3}}};
    }
    case Stage::Bj: {
        const int t = 4;
        const auto k = gen(Gen::k, t), e = gen(Gen::e, t), f = gen(Gen::f, t);
        const GradedClass shifted = (kJ - CoeffPoly(2)) * f;
        return {stage,
                "Bj",
                t,
                kD * k - sc(2, t) * e - shifted,
                {{one(t) + f, 1}, {one(t) + k - sc(2, t) * e - shifted, 3}}};
    }
    }
    throw std::logic_error("unknown stage");
}

PushforwardTable pushforward_table(Stage stage) {
    switch (stage) {
    case Stage::B:
        throw std::logic_error("stage B is not a projective bundle");
    case Stage::B1: {
        const int t = 3;
        const auto k = gen(Gen::k, t), h = gen(Gen::h, t);
        const auto kkh = k * k * h;
        return {Gen::e,
                t,
                {GradedClass(t), sc(-1, t), sc(-3, t) * k + sc(2 * kD, t) * h - sc(6, t) * h,
                 sc(-6, t) * k * k + kD * sc(9, t) * k * h - sc(27, t) * k * h,
                 sc(24 * kD, t) * kkh - sc(72, t) * kkh}};
    }
    case Stage::B2: {
        const int t = 2;
        const auto k = gen(Gen::k, t);
        return {Gen::e, t, {GradedClass(t), sc(-1, t), sc(-3, t) * k, sc(-6, t) * k * k}};
    }
    case Stage::Bj: {
        const int t = 3;
        const auto e = gen(Gen::e, t);
        return {Gen::f, t, {GradedClass(t), sc(-1, t), -e, -(e * e), -(e * e * e)}};
    }
    }
    throw std::logic_error("unknown stage");
}

GradedClass pushforward(const GradedClass& c, Stage stage) {
    const PushforwardTable table = pushforward_table(stage);
    const int fiber = static_cast<int>(table.fiber);
    GradedClass out(table.base_dimension);
    for (const auto& [m, coeff] : c.terms()) {
        const int power = m[fiber];
        if (power >= static_cast<int>(table.images.size()))
            throw std::logic_error("fiber power beyond the pushforward table");
        Monomial base = m;
        base[fiber] = 0;
        GradedClass base_class(table.base_dimension);
        base_class.add_term(base, coeff);
        out += base_class * table.images[power];
    }
    return out;
}

CoeffPoly integrate(const GradedClass& c, Stage stage) {
    switch (stage) {
    case Stage::B:
        // k^3 = 0, k^2 h = d, k h^2 = 0, h^3 = 0
        return c.coefficient({2, 1, 0, 0}) * kD;
    case Stage::B1:
        return integrate(pushforward(c, Stage::B1), Stage::B);
    case Stage::B2:
        return pushforward(c, Stage::B2).coefficient({2, 0, 0, 0});
    case Stage::Bj:
        return integrate(pushforward(c, Stage::Bj), base_stage_of_bj());
    }
    throw std::logic_error("unknown stage");
}

CoeffPoly correction_integral(Stage stage) {
    const CenterSpec spec = center_spec(stage);
    const int t = spec.dimension;
    std::vector<ClassFactor> factors{{one(t) + spec.point_class, 8}};
    for (const auto& f : spec.normal_chern) factors.push_back({f.base, -f.exponent});
    const GradedClass integrand = expand_truncated(factors, t);
    return integrate(integrand.part(t), stage);
}

const ChowCorrections& chow_corrections() {
    static const ChowCorrections cached = [] {
        std::array<CoeffPoly, 4> values;
#pragma omp parallel for
        for (int i = 0; i < 4; ++i) values[i] = correction_integral(kAllStages[i]);
        return ChowCorrections{values[0], values[1], values[2], values[3]};
    }();
    return cached;
}

BigInt predegree_via_chow(const FlexProfile& profile) {
    validate_profile(profile);
    const auto& c = chow_corrections();
    const BigInt d = profile.degree;
    BigInt d8;
    mpz_pow_ui(d8.get_mpz_t(), d.get_mpz_t(), 8);
    BigInt result = d8 - c.first.evaluate(d) - c.second.evaluate(d);
    const BigInt per_flex = c.third_per_flex.evaluate(d);
    for (const auto& [order, count] : profile.counts) {
        BigInt local = per_flex;
        for (int j = 3; j <= order + 1; ++j) local += c.higher_per_flex.evaluate(d, j);
        result -= BigInt(static_cast<long>(count)) * local;
    }
    return result;
}

CoeffPoly predegree_via_chow_all_simple() {
    const auto& c = chow_corrections();
    const CoeffPoly flexes = CoeffPoly(3) * kD * (kD - CoeffPoly(2));
    return pow(kD, 8) - c.first - c.second - flexes * c.third_per_flex;
}

} // namespace orbitdeg::chow
