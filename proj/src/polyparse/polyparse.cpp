#include "orbitdeg/polyparse.hpp"

#include "orbitdeg/error.hpp"

#include <cctype>

namespace orbitdeg::parse {

namespace {

using exact::BigInt;
using exact::BigRat;
using exact::MultiPoly;

constexpr long kMaxExponent = 4096;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    MultiPoly parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        MultiPoly p = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& reason) const { throw ParseError(pos_, reason); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_primary() {
        skip_space();
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '(';
    }

    BigInt integer_literal() {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer literal");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
                continue;
            }
            if (!starts_primary()) return acc;
            if (std::isdigit(static_cast<unsigned char>(peek())))
                fail("numeric literal needs an explicit '*' after a factor");
            acc *= unary();
        }
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = primary();
        if (!accept('^')) return base;
        const std::size_t at = pos_;
        BigInt e = integer_literal();
        if (e > kMaxExponent) throw ParseError(at, "exponent too large");
        return exact::pow(base, static_cast<unsigned>(e.get_ui()));
    }

    MultiPoly primary() {
        skip_space();
        const auto& vars = form_variables();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = integer_literal();
            BigInt den = 1;
            if (accept('/')) {
                const std::size_t at = pos_;
                skip_space();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("division is only allowed between integer literals");
                den = integer_literal();
                if (den == 0) throw ParseError(at, "zero denominator");
            }
            return MultiPoly::constant(vars, exact::make_rat(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::string name(1, c);
            if (name != "x" && name != "y" && name != "z") fail("unknown variable '" + name + "'");
            ++pos_;
            return MultiPoly::variable(vars, name);
        }
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (at_end()) fail("unexpected end of expression");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

const std::vector<std::string>& form_variables() {
    static const std::vector<std::string> vars{"x", "y", "z"};
    return vars;
}

exact::MultiPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

ParsedForm parse_form(std::string_view text) {
    MultiPoly p = parse_polynomial(text);
    if (p.is_zero()) throw InvalidArgument("curve equation is the zero polynomial");
    if (!p.is_homogeneous()) {
        int lo = p.total_degree();
        for (const auto& [e, c] : p.terms()) lo = std::min(lo, e[0] + e[1] + e[2]);
        throw NonHomogeneous("expression is not homogeneous (terms of degree " + std::to_string(lo) + " and " +
                             std::to_string(p.total_degree()) + ")");
    }
    return {p, p.total_degree()};
}

} // namespace orbitdeg::parse
