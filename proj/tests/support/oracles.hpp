#pragma once

// Independent reference implementations. None of these call the routine
// they check; they trade speed for obviousness.

#include "orbitdeg/chowcalc/graded.hpp"
#include "orbitdeg/exactpoly/multipoly.hpp"
#include "orbitdeg/exactpoly/unipoly.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace orbitdeg::testing {

using exact::BigInt;
using exact::BigRat;
using exact::MultiPoly;
using exact::UniPoly;

inline BigRat rat_pow(const BigRat& b, int e) {
    BigRat r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Long division remainder written out directly over Q.
inline std::vector<BigRat> remainder_of(std::vector<BigRat> a, const std::vector<BigRat>& b) {
    auto trim = [](std::vector<BigRat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    while (a.size() >= b.size()) {
        const BigRat q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

/// Res(f, g) by the Euclidean recurrence
///   Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r),  r = f mod g.
inline BigRat resultant_euclid(std::vector<BigRat> f, std::vector<BigRat> g) {
    BigRat scale = 1;
    for (;;) {
        const int m = static_cast<int>(f.size()) - 1;
        const int n = static_cast<int>(g.size()) - 1;
        if (m < 0 || n < 0) return 0;
        if (n == 0) return scale * rat_pow(g[0], m);
        if (m == 0) return scale * rat_pow(f[0], n);
        std::vector<BigRat> r = remainder_of(f, g);
        if (r.empty()) return 0;
        const int k = static_cast<int>(r.size()) - 1;
        if ((m * n) % 2 == 1) scale = -scale;
        scale *= rat_pow(g.back(), m - k);
        f = std::move(g);
        g = std::move(r);
    }
}

inline BigRat resultant_euclid(const UniPoly& f, const UniPoly& g) {
    return resultant_euclid(f.coefficients(), g.coefficients());
}

// Coefficients of p in `var` after substituting values for the others.
inline std::vector<BigRat> specialize_to_univariate(const MultiPoly& p, std::size_t var,
                                                    const std::vector<BigRat>& values) {
    std::vector<BigRat> out;
    for (const auto& [e, c] : p.terms()) {
        BigRat term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var) term *= rat_pow(values[i], e[i]);
        if (out.size() <= static_cast<std::size_t>(e[var])) out.resize(e[var] + 1);
        out[e[var]] += term;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

/// Second partial d^2 p / dx_a dx_b evaluated at a point, straight from
/// the term list.
inline BigRat second_partial_at(const MultiPoly& p, std::size_t a, std::size_t b, const std::vector<BigRat>& pt) {
    BigRat sum = 0;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> ex = e;
        BigRat term = c;
        term *= ex[a];
        if (ex[a] == 0) continue;
        --ex[a];
        term *= ex[b];
        if (ex[b] == 0) continue;
        --ex[b];
        for (std::size_t i = 0; i < ex.size(); ++i) term *= rat_pow(pt[i], ex[i]);
        sum += term;
    }
    return sum;
}

inline BigRat det3(const std::array<std::array<BigRat, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline BigRat hessian_at(const MultiPoly& p, const std::vector<BigRat>& pt) {
    std::array<std::array<BigRat, 3>, 3> m;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) m[a][b] = second_partial_at(p, a, b, pt);
    return det3(m);
}

inline BigRat eval_at(const MultiPoly& p, const std::array<BigRat, 3>& q) {
    BigRat sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c * rat_pow(q[0], e[0]) * rat_pow(q[1], e[1]) * rat_pow(q[2], e[2]);
    return sum;
}

// Gradient at q from first partials written out on the term list.
inline std::array<BigRat, 3> gradient_at(const MultiPoly& p, const std::array<BigRat, 3>& q) {
    std::array<BigRat, 3> g{0, 0, 0};
    for (const auto& [e, c] : p.terms())
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            BigRat term = c * e[v];
            for (int i = 0; i < 3; ++i) term *= rat_pow(q[i], e[i] - (i == v ? 1 : 0));
            g[v] += term;
        }
    return g;
}

/// Order of contact of the tangent line at q minus 2, by sampling F along
/// q + t w at deg+1 values of t and solving for the Taylor coefficients
/// (Newton divided differences), then counting leading zeros.
inline int tangent_contact_order(const MultiPoly& p, const std::array<BigRat, 3>& q) {
    const auto g = gradient_at(p, q);
    // w = g x u for a coordinate vector u not parallel to the tangent direction
    std::array<BigRat, 3> w{0, 0, 0};
    for (int u = 0; u < 3; ++u) {
        std::array<BigRat, 3> uv{0, 0, 0};
        uv[u] = 1;
        w = {g[1] * uv[2] - g[2] * uv[1], g[2] * uv[0] - g[0] * uv[2], g[0] * uv[1] - g[1] * uv[0]};
        // w must be independent of q
        const bool parallel = q[0] * w[1] == q[1] * w[0] && q[0] * w[2] == q[2] * w[0] && q[1] * w[2] == q[2] * w[1];
        if (!(w[0] == 0 && w[1] == 0 && w[2] == 0) && !parallel) break;
    }
    const int d = p.total_degree();
    std::vector<BigRat> ts, vals;
    for (int i = 0; i <= d; ++i) {
        const BigRat t = i;
        ts.push_back(t);
        vals.push_back(eval_at(p, {q[0] + t * w[0], q[1] + t * w[1], q[2] + t * w[2]}));
    }
    // divided differences -> Newton form -> monomial coefficients
    std::vector<BigRat> dd = vals;
    for (int j = 1; j <= d; ++j)
        for (int i = d; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (ts[i] - ts[i - j]);
    std::vector<BigRat> coeffs(d + 1, BigRat(0));
    for (int i = d; i >= 0; --i) {
        // coeffs = coeffs * (t - ts[i]) + dd[i]
        std::vector<BigRat> next(d + 1, BigRat(0));
        for (int k = 0; k < d; ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= coeffs[k] * ts[i];
        }
        next[0] += dd[i];
        coeffs = next;
    }
    int order = 0;
    while (order <= d && coeffs[order] == 0) ++order;
    return order - 2;
}

/// Pushforward table of a P^1-bundle P(E) -> base from the Segre class:
/// sum_i (-1)^i p_*(e^i) = s(E) = c(E)^{-1}, i.e. p_*(e^i) = (-1)^i s_{i-1}.
/// `inverse_chern` is c(E)^{-1} expressed on the base.
inline std::vector<chow::GradedClass> pushforward_from_segre(const chow::GradedClass& inverse_chern, int max_power) {
    std::vector<chow::GradedClass> images{chow::GradedClass(inverse_chern.truncation())};
    for (int i = 1; i <= max_power; ++i) {
        chow::GradedClass s = inverse_chern.part(i - 1);
        images.push_back(i % 2 == 0 ? s : -s);
    }
    return images;
}

} // namespace orbitdeg::testing
