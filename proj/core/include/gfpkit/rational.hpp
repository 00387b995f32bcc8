// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "gfpkit/errors.hpp"

namespace gfpkit {

/// Exact rational scalar. All coefficient arithmetic in the library is
/// carried out in this type; nothing is ever rounded.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
inline Rational parse_rational(std::string_view text) {
    try {
        Rational r(std::string(text), 10);
        if (r.get_den() == 0) throw Error("zero denominator in rational: " + std::string(text));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational: " + std::string(text));
    }
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact square root, if the value is a square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

}  // namespace gfpkit
