#include "orbitdeg/flexlab.hpp"

#include "orbitdeg/error.hpp"
#include "orbitdeg/exactpoly/resultant.hpp"
#include "orbitdeg/exactpoly/unipoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace orbitdeg::flex {

namespace {

using exact::BigInt;
using exact::BigRat;
using exact::IntMatrix3;
using exact::MultiPoly;
using exact::UniPoly;

constexpr int kSmoothnessAttempts = 12;
constexpr std::uint64_t kSmoothnessSeed = 0x5eedf1e7ULL;

// Polynomial in y with coefficients in Q[x]/(s), lowest power first.
using ResidueCoeffs = std::vector<UniPoly>;

struct Branch {
    UniPoly modulus;
    ResidueCoeffs gcd;
};

void reduce(ResidueCoeffs& p, const UniPoly& s) {
    for (auto& c : p) c = c % s;
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Inverse of a modulo s; a must be a unit (gcd(a, s) = 1).
UniPoly inverse_mod(const UniPoly& a, const UniPoly& s) {
    UniPoly r0 = s, r1 = a % s;
    UniPoly t0, t1 = UniPoly({BigRat(1)});
    while (!r1.is_zero()) {
        auto [q, r] = exact::divmod(r0, r1);
        UniPoly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    // r0 is a nonzero constant here
    return (t0 * BigRat(1 / r0.leading())) % s;
}

// Splitting gcd over the product of fields Q[x]/(s), s squarefree. Each
// branch's modulus divides s, and on every root of that modulus the gcd
// has the same degree in y.
std::vector<Branch> gcd_split(const UniPoly& s, const ResidueCoeffs& a0, const ResidueCoeffs& b0) {
    struct Task {
        UniPoly s;
        ResidueCoeffs a, b;
    };
    std::vector<Branch> out;
    std::vector<Task> work{{s, a0, b0}};

    auto split_on_lead = [&](Task& t, const ResidueCoeffs& p) {
        if (p.empty()) return false;
        const UniPoly g = exact::gcd(p.back(), t.s);
        if (g.degree() <= 0) return false;
        work.push_back({g, t.a, t.b});
        work.push_back({exact::divide_exact(t.s, g), t.a, t.b});
        return true;
    };

    while (!work.empty()) {
        Task t = std::move(work.back());
        work.pop_back();
        reduce(t.a, t.s);
        reduce(t.b, t.s);
        if (split_on_lead(t, t.a) || split_on_lead(t, t.b)) continue;
        if (t.a.size() < t.b.size()) std::swap(t.a, t.b);
        if (t.b.empty()) {
            out.push_back({t.s, t.a});
            continue;
        }
        const UniPoly inv = inverse_mod(t.b.back(), t.s);
        while (t.a.size() >= t.b.size()) {
            const UniPoly q = (t.a.back() * inv) % t.s;
            const std::size_t shift = t.a.size() - t.b.size();
            for (std::size_t j = 0; j < t.b.size(); ++j) t.a[shift + j] = (t.a[shift + j] - q * t.b[j]) % t.s;
            t.a.pop_back();
            while (!t.a.empty() && t.a.back().is_zero()) t.a.pop_back();
            if (!t.a.empty()) {
                const UniPoly g = exact::gcd(t.a.back(), t.s);
                if (g.degree() > 0) break;  // zero divisor: let the next pass split
            }
        }
        work.push_back({t.s, t.b, t.a});
    }
    return out;
}

ResidueCoeffs as_residues(const MultiPoly& p) {
    ResidueCoeffs out;
    for (const auto& c : exact::coefficients_in(p, "y")) out.push_back(exact::to_unipoly(c, "x"));
    return out;
}

std::string format_point(const std::array<BigRat, 3>& v) {
    BigInt den = 1;
    for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::array<BigInt, 3> ints;
    BigInt g = 0;
    for (int i = 0; i < 3; ++i) {
        ints[i] = v[i].get_num() * (den / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < 3; ++i) {
        if (i) os << ':';
        os << (g == 0 ? ints[i] : BigInt(ints[i] / g)).get_str();
    }
    os << ')';
    return os.str();
}

std::array<BigRat, 3> apply(const IntMatrix3& m, const std::array<BigRat, 3>& v) {
    std::array<BigRat, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[i] = 0;
        for (int j = 0; j < 3; ++j) out[i] += BigRat(m[i][j]) * v[j];
    }
    return out;
}

enum class Verdict { Smooth, Singular, Inconclusive };

struct Outcome {
    Verdict verdict;
    std::optional<std::string> witness;
    bool eliminant_vanished = false;
};

// Gradient components already composed with the coordinate change m.
Outcome examine(const std::array<MultiPoly, 3>& grad, const IntMatrix3& m, int d) {
    // Line at infinity z = 0: common projective zeros of the binary forms.
    {
        bool all_vanish_at_x_axis = true;
        const exact::Exponents top{d - 1, 0, 0};
        for (const auto& g : grad)
            if (g.coefficient(top) != 0) all_vanish_at_x_axis = false;
        if (all_vanish_at_x_axis)
            return {Verdict::Singular, format_point(apply(m, {BigRat(1), BigRat(0), BigRat(0)}))};

        UniPoly common;
        for (const auto& g : grad) {
            const MultiPoly at_infinity = exact::specialize(exact::specialize(g, "z", 0), "y", 1);
            common = exact::gcd(common, exact::to_unipoly(at_infinity, "x"));
        }
        if (common.is_zero() || common.degree() > 0) {
            std::optional<std::string> witness;
            if (common.degree() == 1)
                witness = format_point(apply(m, {BigRat(-common.coefficient(0) / common.coefficient(1)), BigRat(1),
                                                 BigRat(0)}));
            return {Verdict::Singular, witness};
        }
    }

    // Affine chart z = 1, eliminating y. The first component must have a
    // nonzero constant leading coefficient in y.
    std::array<MultiPoly, 3> affine;
    for (int i = 0; i < 3; ++i) affine[i] = exact::specialize(grad[i], "z", 1);
    // a zero component means the partials are linearly dependent
    for (const auto& a : affine)
        if (a.is_zero()) return {Verdict::Inconclusive, {}, true};
    if (grad[0].coefficient({0, d - 1, 0}) == 0) return {Verdict::Inconclusive, {}};

    const MultiPoly r1 = exact::resultant(affine[0], affine[1], "y");
    const MultiPoly r2 = exact::resultant(affine[0], affine[2], "y");
    if (r1.is_zero() || r2.is_zero()) return {Verdict::Inconclusive, {}, true};

    const UniPoly g = exact::gcd(exact::to_unipoly(r1, "x"), exact::to_unipoly(r2, "x"));
    if (g.degree() == 0) return {Verdict::Smooth, {}};

    const UniPoly s = exact::squarefree_part(g);
    const ResidueCoeffs a = as_residues(affine[0]);
    const ResidueCoeffs b = as_residues(affine[1]);
    const ResidueCoeffs c = as_residues(affine[2]);
    for (const auto& ab : gcd_split(s, a, b)) {
        for (const auto& abc : gcd_split(ab.modulus, ab.gcd, c)) {
            if (abc.gcd.size() < 2) continue;
            std::optional<std::string> witness;
            if (abc.modulus.degree() == 1 && abc.gcd.size() == 2) {
                const BigRat x0 = -abc.modulus.coefficient(0) / abc.modulus.coefficient(1);
                const BigRat y0 = -abc.gcd[0].coefficient(0) / abc.gcd[1].coefficient(0);
                witness = format_point(apply(m, {x0, y0, BigRat(1)}));
            }
            return {Verdict::Singular, witness};
        }
    }
    return {Verdict::Smooth, {}};
}

} // namespace

PlaneCurve check_smooth(const MultiPoly& form) {
    if (form.variables() != std::vector<std::string>{"x", "y", "z"})
        throw VariableMismatch("a plane curve is a form in the variables x, y, z");
    if (form.is_zero()) throw InvalidArgument("curve equation is the zero polynomial");
    if (!form.is_homogeneous()) throw NonHomogeneous("curve equation is not homogeneous");
    const int d = form.total_degree();
    if (d < 3) throw InvalidArgument("curve degree must be at least 3, got " + std::to_string(d));

    std::array<MultiPoly, 3> grad;
    for (int i = 0; i < 3; ++i) grad[i] = exact::differentiate(form, form.variables()[i]);

    // Common zeros of the partials are those of any invertible combination
    // of them; random combinations keep the eliminants from vanishing
    // identically when two partials happen to share a factor.
    std::mt19937_64 rng(kSmoothnessSeed);
    IntMatrix3 m = exact::identity_matrix3();
    IntMatrix3 mix = exact::identity_matrix3();
    bool eliminants_always_vanish = true;
    for (int attempt = 0; attempt < kSmoothnessAttempts; ++attempt) {
        std::array<MultiPoly, 3> moved;
        for (int i = 0; i < 3; ++i) {
            moved[i] = MultiPoly(form.variables());
            for (int j = 0; j < 3; ++j)
                if (mix[i][j] != 0) moved[i] += exact::linear_substitute(grad[j], m) * BigRat(mix[i][j]);
        }
        const Outcome o = examine(moved, m, d);
        if (o.verdict == Verdict::Smooth) return PlaneCurve(form, d);
        if (o.verdict == Verdict::Singular) {
            std::string what = "curve is singular";
            if (o.witness) what += " at " + *o.witness;
            throw SingularCurve(what, o.witness);
        }
        if (!o.eliminant_vanished) eliminants_always_vanish = false;
        m = random_unimodular(rng, 3 + attempt);
        mix = random_unimodular(rng, 3 + attempt);
    }
    if (eliminants_always_vanish)
        throw SingularCurve("curve is singular along a common component of its partial derivatives");
    throw GenericityFailure("smoothness check found no usable projection");
}

IntMatrix3 random_unimodular(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    std::uniform_int_distribution<int> coin(0, 1);
    IntMatrix3 lower = exact::identity_matrix3();
    IntMatrix3 upper = exact::identity_matrix3();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j) {
            lower[i][j] = entry(rng);
            upper[j][i] = entry(rng);
        }
    std::array<int, 3> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);

    IntMatrix3 out;
    for (int i = 0; i < 3; ++i) {
        const int sign = coin(rng) ? -1 : 1;
        for (int j = 0; j < 3; ++j) {
            BigInt acc = 0;
            for (int k = 0; k < 3; ++k) acc += lower[perm[i]][k] * upper[k][j];
            out[i][j] = acc * sign;
        }
    }
    return out;
}

} // namespace orbitdeg::flex
