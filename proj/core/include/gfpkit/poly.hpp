// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfpkit/rational.hpp"

namespace gfpkit {

/// Dense univariate polynomial over exact rationals.
///
/// Coefficient i is the coefficient of x^i. Values are kept in canonical
/// form: the zero polynomial stores no coefficients at all, every other
/// value has a nonzero coefficient at the highest stored index. Instances
/// are immutable once built; all operations return fresh values, so a Poly
/// may be shared freely across threads.
class Poly {
public:
    Poly() = default;
    Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT: implicit by design
    explicit Poly(const Rational& constant);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x() { return monomial(1, 1); }
    static Poly monomial(Rational coeff, std::size_t exponent);

    /// Parses the textual format produced by str(): descending powers,
    /// explicit signs, '^' exponents, integer or rational coefficients,
    /// e.g. "x^2 - 4" or "1/2*x^3 + 3*x - 1/2".
    static Poly parse(std::string_view text);

    bool is_zero() const { return c_.empty(); }

    /// Degree, or nullopt for the zero polynomial. There is deliberately no
    /// numeric sentinel: degree arithmetic on zero should fail to compile
    /// or fail loudly, never silently produce -1.
    std::optional<std::size_t> degree() const;

    const Rational& leading() const;
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    bool has_integer_coeffs() const;

    Rational eval(const Rational& x0) const;

    std::string str() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.c_ == rhs.c_; }
    friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

private:
    std::vector<Rational> c_;

    void canonicalize();
};

/// Repeated-squaring exponentiation; pow(p, 0) == 1 for every p.
Poly pow(const Poly& base, std::uint64_t exponent);

/// Quotient and remainder of polynomial long division. Throws DivisionByZero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Exact quotient. Throws NotDivisible if a nonzero remainder is left,
/// DivisionByZero if den is zero.
Poly exact_div(const Poly& num, const Poly& den);

/// Monic greatest common divisor (Euclidean algorithm). Throws BothZero.
Poly gcd(const Poly& a, const Poly& b);

/// Exact square root with positive leading coefficient; sqrt_exact(0) == 0.
/// Throws NotASquare when no rational-coefficient root exists.
Poly sqrt_exact(const Poly& p);

}  // namespace gfpkit
