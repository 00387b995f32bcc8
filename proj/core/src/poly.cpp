// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "gfpkit/poly.hpp"

#include <algorithm>
#include <cctype>

#include "gfpkit/errors.hpp"

namespace gfpkit {

Poly::Poly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { canonicalize(); }

Poly Poly::monomial(Rational coeff, std::size_t exponent) {
    if (coeff == 0) return {};
    std::vector<Rational> c(exponent + 1, Rational(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

void Poly::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Poly::coeff(std::size_t i) const {
    if (i >= c_.size()) return Rational(0);
    return c_[i];
}

bool Poly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return is_integer(r); });
}

Rational Poly::eval(const Rational& x0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    canonicalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    canonicalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> c(lhs.c_.size() + rhs.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly pow(const Poly& base, std::uint64_t exponent) {
    Poly result(1);
    Poly sq = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= sq;
        exponent >>= 1u;
        if (exponent != 0) sq *= sq;
    }
    return result;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return {Poly(), Poly()};
    const std::size_t dd = *den.degree();
    std::vector<Rational> rem(num.coeffs());
    if (rem.size() < dd + 1) return {Poly(), num};
    std::vector<Rational> quot(rem.size() - dd, Rational(0));
    const Rational& lead = den.leading();
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] / lead;
        quot[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw NotDivisible("(" + num.str() + ") is not divisible by (" + den.str() + ")");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    // monic representative
    return exact_div(r0, Poly(r0.leading()));
}

Poly sqrt_exact(const Poly& p) {
    if (p.is_zero()) return {};
    const std::size_t deg = *p.degree();
    if (deg % 2 != 0) throw NotASquare("odd degree: " + p.str());
    const std::size_t half = deg / 2;
    auto lead = rational_sqrt(p.leading());
    if (!lead) throw NotASquare("leading coefficient is not a rational square: " + p.str());
    std::vector<Rational> r(half + 1, Rational(0));
    r[half] = *lead;
    const Rational two_lead = 2 * r[half];
    // Match coefficients of x^(half+i) from the top down; each step pins r[i].
    for (std::size_t i = half; i-- > 0;) {
        Rational acc = p.coeff(half + i);
        for (std::size_t a = i + 1; a < half; ++a) {
            const std::size_t b = half + i - a;
            if (b <= a || b > half) continue;
            acc -= 2 * r[a] * r[b];
        }
        if ((half + i) % 2 == 0) {
            const std::size_t mid = (half + i) / 2;
            if (mid > i && mid < half) acc -= r[mid] * r[mid];
        }
        r[i] = acc / two_lead;
    }
    Poly root(std::move(r));
    if (root * root != p) throw NotASquare("no exact square root: " + p.str());
    return root;
}

// -- textual format ---------------------------------------------------------

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t idx = c_.size(); idx-- > 0;) {
        const Rational& c = c_[idx];
        if (c == 0) continue;
        const bool neg = sgn(c) < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = abs(c);
        if (idx == 0) {
            out += rational_str(mag);
        } else {
            if (mag != 1) out += rational_str(mag) + "*";
            out += "x";
            if (idx > 1) out += "^" + std::to_string(idx);
        }
    }
    return out;
}

namespace {

struct PolyScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
    }

    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::string(text.substr(start, pos - start));
    }

    Rational number() {
        std::string num = integer();
        if (consume('/')) return parse_rational(num + "/" + integer());
        return parse_rational(num);
    }

    std::size_t exponent_of_x() {
        if (!consume('x')) fail("expected 'x'");
        if (consume('^')) return static_cast<std::size_t>(std::stoull(integer()));
        return 1;
    }

    // one term: [coeff]['*'] [x['^'k]]
    Poly term() {
        if (peek() == 'x') return Poly::monomial(1, exponent_of_x());
        Rational c = number();
        skip_ws();
        if (consume('*') || peek() == 'x') return Poly::monomial(c, exponent_of_x());
        return Poly(c);
    }
};

}  // namespace

Poly Poly::parse(std::string_view text) {
    PolyScanner s{text};
    if (s.eof()) s.fail("empty input");
    Poly acc;
    bool negative = s.consume('-');
    while (true) {
        Poly t = s.term();
        acc += negative ? -t : t;
        if (s.eof()) break;
        if (s.consume('+'))
            negative = false;
        else if (s.consume('-'))
            negative = true;
        else
            s.fail("expected '+' or '-'");
    }
    return acc;
}

}  // namespace gfpkit
