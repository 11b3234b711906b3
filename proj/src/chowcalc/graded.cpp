#include "orbitdeg/chowcalc/graded.hpp"

#include "orbitdeg/error.hpp"

#include <algorithm>
#include <sstream>

namespace orbitdeg::chow {

int degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3]; }

GradedClass::GradedClass(int truncation) : truncation_(truncation) {}

GradedClass GradedClass::scalar(const CoeffPoly& c, int truncation) {
    GradedClass out(truncation);
    out.add_term({0, 0, 0, 0}, c);
    return out;
}

GradedClass GradedClass::generator(Gen g, int truncation) {
    GradedClass out(truncation);
    Monomial m{0, 0, 0, 0};
    m[static_cast<int>(g)] = 1;
    out.add_term(m, 1);
    return out;
}

CoeffPoly GradedClass::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CoeffPoly() : it->second;
}

void GradedClass::add_term(const Monomial& m, const CoeffPoly& c) {
    if (c.is_zero() || degree(m) > truncation_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedClass GradedClass::part(int deg) const {
    GradedClass out(truncation_);
    for (const auto& [m, c] : terms_)
        if (degree(m) == deg) out.terms_.emplace(m, c);
    return out;
}

GradedClass GradedClass::truncated(int truncation) const {
    GradedClass out(truncation);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    truncation_ = std::min(truncation_, o.truncation_);
    *this = truncated(truncation_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) { return *this += -o; }

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    GradedClass out(std::min(a.truncation_, b.truncation_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            const Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
            if (degree(m) <= out.truncation_) out.add_term(m, ca * cb);
        }
    }
    return out;
}

GradedClass operator*(const CoeffPoly& s, const GradedClass& a) {
    GradedClass out(a.truncation_);
    for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
    return out;
}

GradedClass GradedClass::operator-() const { return CoeffPoly(-1) * *this; }

GradedClass pow(const GradedClass& u, unsigned exponent) {
    GradedClass result = GradedClass::scalar(1, u.truncation());
    for (unsigned i = 0; i < exponent; ++i) result = result * u;
    return result;
}

GradedClass inverse(const GradedClass& u) {
    if (u.constant_term() != CoeffPoly(1))
        throw InvalidArgument("class is not a unit with constant term 1: " + to_string(u));
    // u = 1 + n with n nilpotent in the truncated ring
    const GradedClass n = u - GradedClass::scalar(1, u.truncation());
    GradedClass term = GradedClass::scalar(1, u.truncation());
    GradedClass sum = term;
    for (int i = 1; i <= u.truncation(); ++i) {
        term = -(term * n);
        sum += term;
    }
    return sum;
}

GradedClass expand_truncated(std::span<const ClassFactor> factors, int truncation) {
    GradedClass out = GradedClass::scalar(1, truncation);
    for (const auto& f : factors) {
        const GradedClass base = f.base.truncated(truncation);
        const GradedClass b = f.exponent >= 0 ? base : inverse(base);
        out = out * pow(b, static_cast<unsigned>(f.exponent >= 0 ? f.exponent : -f.exponent));
    }
    return out;
}

std::string to_string(const GradedClass& c) {
    if (c.is_zero()) return "0";
    static constexpr const char* kNames[] = {"k", "h", "e", "f"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, coeff] : c.terms()) {
        if (!first) os << " + ";
        first = false;
        const bool is_const = degree(m) == 0;
        const bool unit = coeff == CoeffPoly(1);
        if (!unit || is_const) os << '(' << to_string(coeff) << ')';
        bool wrote = !unit || is_const;
        for (int g = 0; g < 4; ++g) {
            if (m[g] == 0) continue;
            os << (wrote ? "*" : "") << kNames[g];
            if (m[g] > 1) os << '^' << m[g];
            wrote = true;
        }
    }
    return os.str();
}

} // namespace orbitdeg::chow
