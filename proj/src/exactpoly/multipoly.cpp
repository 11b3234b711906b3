#include "orbitdeg/exactpoly/multipoly.hpp"

#include "orbitdeg/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbitdeg::exact {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) { return v.get_str(); }

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const BigRat& value) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), value);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
    MultiPoly p(std::move(variables));
    Exponents e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, 1);
    return p;
}

std::size_t MultiPoly::index_of(std::string_view name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw VariableMismatch("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                              terms_.begin()->first.end(),
                                              [](int x) { return x == 0; }));
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return kZeroDegree;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(std::size_t var) const {
    int best = kZeroDegree;
    for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
    return best;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
        return std::accumulate(t.first.begin(), t.first.end(), 0) == d;
    });
}

BigRat MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRat(0) : it->second;
}

const BigRat& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

const Exponents& MultiPoly::leading_exponents() const {
    if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

void MultiPoly::add_term(const Exponents& e, const BigRat& c) {
    if (e.size() != vars_.size())
        throw VariableMismatch("exponent vector length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigRat MultiPoly::evaluate(std::span<const BigRat> point) const {
    if (point.size() != vars_.size()) throw VariableMismatch("evaluation point has wrong arity");
    BigRat sum = 0;
    for (const auto& [e, c] : terms_) {
        BigRat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        sum += t;
    }
    return sum;
}

void MultiPoly::require_same_variables(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw VariableMismatch("polynomials are over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_variables(b);
    MultiPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const BigRat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
    MultiPoly result = MultiPoly::constant(p.variables(), 1);
    MultiPoly base = p;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

MultiPoly differentiate(const MultiPoly& p, std::string_view var) {
    const std::size_t v = p.index_of(var);
    MultiPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] == 0) continue;
        Exponents de = e;
        --de[v];
        out.add_term(de, c * e[v]);
    }
    return out;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    MultiPoly rem = a;
    MultiPoly quot(a.variables());
    const Exponents& lb = b.leading_exponents();
    const BigRat& cb = b.leading_coefficient();
    Exponents q(lb.size());
    while (!rem.is_zero()) {
        const Exponents& lr = rem.leading_exponents();
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = lr[i] - lb[i];
            if (q[i] < 0) throw InvalidArgument("polynomial division is not exact");
        }
        MultiPoly mono(a.variables());
        mono.add_term(q, rem.leading_coefficient() / cb);
        quot += mono;
        rem -= mono * b;
    }
    return quot;
}

MultiPoly specialize(const MultiPoly& p, std::string_view var, const BigRat& value) {
    const std::size_t v = p.index_of(var);
    MultiPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        BigRat t = c;
        for (int k = 0; k < e[v]; ++k) t *= value;
        Exponents f = e;
        f[v] = 0;
        out.add_term(f, t);
    }
    return out;
}

BigInt determinant(const IntMatrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

IntMatrix3 adjugate(const IntMatrix3& m) {
    IntMatrix3 a;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // cofactor of entry (j, i)
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    }
    return a;
}

IntMatrix3 identity_matrix3() {
    IntMatrix3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
    return m;
}

MultiPoly linear_substitute(const MultiPoly& p, const IntMatrix3& m) {
    if (p.num_variables() < 3) throw VariableMismatch("linear_substitute needs three variables");
    if (determinant(m) == 0) throw InvalidArgument("singular coordinate change");
    const auto& vars = p.variables();

    std::array<MultiPoly, 3> forms;
    for (int i = 0; i < 3; ++i) {
        forms[i] = MultiPoly(vars);
        for (int j = 0; j < 3; ++j) {
            Exponents e(vars.size(), 0);
            e[j] = 1;
            forms[i].add_term(e, BigRat(m[i][j]));
        }
    }

    // powers[i][k] = forms[i]^k, filled lazily
    std::array<std::vector<MultiPoly>, 3> powers;
    for (int i = 0; i < 3; ++i) powers[i].push_back(MultiPoly::constant(vars, 1));
    auto power_of = [&](int i, int k) -> const MultiPoly& {
        while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * forms[i]);
        return powers[i][k];
    };

    MultiPoly out(vars);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly rest(vars);
        Exponents tail(vars.size(), 0);
        for (std::size_t i = 3; i < vars.size(); ++i) tail[i] = e[i];
        rest.add_term(tail, c);
        MultiPoly t = rest * power_of(0, e[0]) * power_of(1, e[1]) * power_of(2, e[2]);
        out += t;
    }
    return out;
}

MultiPoly hessian_determinant(const MultiPoly& f) {
    if (f.num_variables() != 3) throw VariableMismatch("Hessian needs a form in exactly three variables");
    if (!f.is_homogeneous()) throw NonHomogeneous("Hessian input is not homogeneous");
    const auto& v = f.variables();
    std::array<MultiPoly, 3> first;
    for (int i = 0; i < 3; ++i) first[i] = differentiate(f, v[i]);
    std::array<std::array<MultiPoly, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            h[i][j] = differentiate(first[i], v[j]);
            if (j != i) h[j][i] = h[i][j];
        }
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
           h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const BigRat mag = negative ? BigRat(-c) : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        bool wrote = false;
        const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (mag != 1 || is_const) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << p.variables()[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

} // namespace orbitdeg::exact
