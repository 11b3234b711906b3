#include "orbitdeg/exactpoly/resultant.hpp"

#include "orbitdeg/error.hpp"

#include <algorithm>
#include <set>

namespace orbitdeg::exact {

namespace {

template <class T, class IsZero, class DivExact>
T bareiss_determinant(std::vector<std::vector<T>>& m, const T& zero, const T& one, IsZero is_zero,
                      DivExact div_exact) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && is_zero(m[p][k])) ++p;
        if (p == n) return zero;
        if (p != k) {
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = div_exact(num, prev);
            }
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (negate) det = -det;
    return det;
}

template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& fc, const std::vector<T>& gc, const T& zero) {
    const std::size_t m = fc.size() - 1;
    const std::size_t n = gc.size() - 1;
    std::vector<std::vector<T>> s(m + n, std::vector<T>(m + n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = fc[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = gc[n - k];
    return s;
}

// det of the Sylvester matrix of two rational coefficient lists (lowest
// degree first, leading entries may be zero after specialization).
BigRat sylvester_determinant(const std::vector<BigRat>& fc, const std::vector<BigRat>& gc) {
    auto s = sylvester(fc, gc, BigRat(0));
    BigInt scale = 1;
    std::vector<std::vector<BigInt>> ints(s.size(), std::vector<BigInt>(s.size()));
    for (std::size_t r = 0; r < s.size(); ++r) {
        BigInt den = 1;
        for (const auto& x : s[r]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t c = 0; c < s.size(); ++c) ints[r][c] = s[r][c].get_num() * (den / s[r][c].get_den());
        scale *= den;
    }
    return make_rat(determinant_bareiss(std::move(ints)), scale);
}

void require_nonzero(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw InvalidArgument("resultant of a zero polynomial");
    if (f.variables() != g.variables()) throw VariableMismatch("resultant operands use different variables");
}

std::set<std::size_t> other_variables(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
    std::set<std::size_t> out;
    for (const MultiPoly* p : {&f, &g})
        for (const auto& [e, c] : p->terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != var && e[i] > 0) out.insert(i);
    return out;
}

UniPoly restrict_to(const MultiPoly& p, std::size_t var) {
    std::vector<BigRat> c(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, BigRat(0));
    for (const auto& [e, v] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw InvalidArgument("polynomial involves '" + p.variables()[i] + "'");
        c[e[var]] += v;
    }
    return UniPoly(std::move(c));
}

} // namespace

BigInt determinant_bareiss(std::vector<std::vector<BigInt>> m) {
    return bareiss_determinant(
        m, BigInt(0), BigInt(1), [](const BigInt& x) { return x == 0; },
        [](const BigInt& a, const BigInt& b) {
            BigInt q;
            mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return q;
        });
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::string_view var) {
    const std::size_t v = p.index_of(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1,
                               MultiPoly(p.variables()));
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        rest[v] = 0;
        out[e[v]].add_term(rest, c);
    }
    return out;
}

UniPoly to_unipoly(const MultiPoly& p, std::string_view var) { return restrict_to(p, p.index_of(var)); }

MultiPoly from_unipoly(const UniPoly& p, const std::vector<std::string>& variables, std::string_view var) {
    MultiPoly out(variables);
    const std::size_t v = out.index_of(var);
    for (int i = 0; i <= p.degree(); ++i) {
        Exponents e(variables.size(), 0);
        e[v] = i;
        out.add_term(e, p.coefficients()[i]);
    }
    return out;
}

MultiPoly resultant_bareiss(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    require_nonzero(f, g);
    const auto fc = coefficients_in(f, var);
    const auto gc = coefficients_in(g, var);
    const MultiPoly zero(f.variables());
    auto s = sylvester(fc, gc, zero);
    return bareiss_determinant(
        s, zero, MultiPoly::constant(f.variables(), 1), [](const MultiPoly& p) { return p.is_zero(); },
        [](const MultiPoly& a, const MultiPoly& b) { return divide_exact(a, b); });
}

MultiPoly resultant_interpolated(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    require_nonzero(f, g);
    const std::size_t v = f.index_of(var);
    const auto others = other_variables(f, g, v);
    if (others.size() > 1)
        throw InvalidArgument("interpolated resultant supports one remaining variable");

    const auto fc = coefficients_in(f, var);
    const auto gc = coefficients_in(g, var);
    const std::size_t u = others.empty() ? v : *others.begin();

    std::vector<UniPoly> fu, gu;
    for (const auto& c : fc) fu.push_back(restrict_to(c, u));
    for (const auto& c : gc) gu.push_back(restrict_to(c, u));

    // Each Sylvester term takes deg_var(g) entries from f's rows and
    // deg_var(f) entries from g's rows.
    int fdeg = 0, gdeg = 0;
    if (!others.empty()) {
        fdeg = std::max(f.degree_in(u), 0);
        gdeg = std::max(g.degree_in(u), 0);
    }
    const int bound = static_cast<int>(gc.size() - 1) * fdeg + static_cast<int>(fc.size() - 1) * gdeg;
    const int npoints = bound + 1;

    std::vector<BigRat> values(static_cast<std::size_t>(npoints));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < npoints; ++i) {
        const BigRat x(i);
        std::vector<BigRat> fv, gv;
        fv.reserve(fu.size());
        gv.reserve(gu.size());
        for (const auto& c : fu) fv.push_back(c.evaluate(x));
        for (const auto& c : gu) gv.push_back(c.evaluate(x));
        values[i] = sylvester_determinant(fv, gv);
    }

    // Newton divided differences on the nodes 0, 1, ..., bound.
    std::vector<BigRat> dd = values;
    for (int level = 1; level < npoints; ++level)
        for (int i = npoints - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / level;

    UniPoly acc({dd[npoints - 1]});
    for (int k = npoints - 2; k >= 0; --k) acc = acc * UniPoly({BigRat(-k), BigRat(1)}) + UniPoly({dd[k]});

    if (others.empty()) return MultiPoly::constant(f.variables(), acc.coefficient(0));
    return from_unipoly(acc, f.variables(), f.variables()[u]);
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    require_nonzero(f, g);
    if (other_variables(f, g, f.index_of(var)).size() <= 1) return resultant_interpolated(f, g, var);
    return resultant_bareiss(f, g, var);
}

BigRat resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) throw InvalidArgument("resultant of a zero polynomial");
    return sylvester_determinant(f.coefficients(), g.coefficients());
}

} // namespace orbitdeg::exact
