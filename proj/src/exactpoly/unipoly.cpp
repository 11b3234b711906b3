#include "orbitdeg/exactpoly/unipoly.hpp"

#include "orbitdeg/error.hpp"

#include <algorithm>
#include <sstream>

namespace orbitdeg::exact {

UniPoly::UniPoly(std::vector<BigRat> coefficients) : c_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(const BigRat& c, int degree) {
    if (c == 0) return {};
    std::vector<BigRat> v(static_cast<std::size_t>(degree) + 1, BigRat(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRat UniPoly::coefficient(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigRat(0);
}

const BigRat& UniPoly::leading() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return c_.back();
}

BigRat UniPoly::evaluate(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> out(a.c_.size() + b.c_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(UniPoly a, const BigRat& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
}

UniPoly UniPoly::operator-() const { return *this * BigRat(-1); }

UniPoly derivative(const UniPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<BigRat> out(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coefficients()[i] * i;
    return UniPoly(std::move(out));
}

UniPoly monic(const UniPoly& p) {
    if (p.is_zero()) return p;
    return p * BigRat(1 / p.leading());
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<BigRat> rem = a.coefficients();
    std::vector<BigRat> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), BigRat(0));
    const auto& bc = b.coefficients();
    const BigRat inv_lead = 1 / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const BigRat q = rem[k + b.degree()] * inv_lead;
        quot[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvalidArgument("univariate division is not exact");
    return q;
}

namespace {

std::vector<BigInt> to_primitive_integers(const UniPoly& p) {
    BigInt den = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(p.coefficients().size());
    BigInt content = 0;
    for (const auto& c : p.coefficients()) {
        BigInt v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content != 0) {
        if (out.back() < 0) content = -content;
        for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
    return out;
}

void make_primitive(std::vector<BigInt>& v) {
    BigInt content = 0;
    for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content == 0 || content == 1) return;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
}

// In-place pseudo-remainder of a by b (both integer, nonzero, deg a >= deg b).
void pseudo_remainder(std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    const std::size_t nb = b.size();
    const BigInt& lb = b.back();
    while (a.size() >= nb) {
        const BigInt la = a.back();
        const std::size_t shift = a.size() - nb;
        for (auto& x : a) x *= lb;
        for (std::size_t j = 0; j < nb; ++j) a[shift + j] -= la * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
        make_primitive(a);
    }
}

} // namespace

UniPoly primitive_part(const UniPoly& p) {
    std::vector<BigInt> ints = to_primitive_integers(p);
    std::vector<BigRat> out(ints.begin(), ints.end());
    return UniPoly(std::move(out));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    std::vector<BigInt> u = to_primitive_integers(a);
    std::vector<BigInt> v = to_primitive_integers(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        pseudo_remainder(u, v);
        std::swap(u, v);
    }
    std::vector<BigRat> out(u.begin(), u.end());
    return monic(UniPoly(std::move(out)));
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw InvalidArgument("squarefree part of the zero polynomial");
    return monic(divide_exact(p, gcd(p, derivative(p))));
}

std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& p) {
    if (p.is_zero()) throw InvalidArgument("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.degree() == 0) return out;

    const UniPoly dp = derivative(p);
    const UniPoly a0 = gcd(p, dp);
    UniPoly b = divide_exact(p, a0);
    UniPoly c = divide_exact(dp, a0);
    UniPoly d = c - derivative(b);
    for (int i = 1; !b.is_constant(); ++i) {
        const UniPoly a = gcd(b, d);
        if (a.degree() > 0) out.push_back({i, monic(a)});
        b = divide_exact(b, a);
        c = divide_exact(d, a);
        d = c - derivative(b);
    }
    return out;
}

std::string to_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const BigRat& c = p.coefficients()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigRat mag = negative ? BigRat(-c) : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) {
            os << mag.get_str();
            if (i > 0) os << '*';
        }
        if (i > 0) os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

} // namespace orbitdeg::exact
