// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include "gfpkit/errors.hpp"
#include "gfpkit/sequence.hpp"

using namespace gfpkit;

namespace {
Poly P(const char* text) { return Poly::parse(text); }
}  // namespace

TEST_CASE("recurrence terms") {
    SequenceCache fib(*find_family("fibonacci"));
    CHECK(fib.term(0).is_zero());
    CHECK(fib.term(1) == Poly(1));
    CHECK(fib.term(3) == P("x^2 + 1"));
    CHECK(fib.term(5) == P("x^4 + 3*x^2 + 1"));

    SequenceCache lucas(*find_family("lucas"));
    CHECK(lucas.term(0) == Poly(2));
    CHECK(lucas.term(2) == P("x^2 + 2"));

    SequenceCache jac(*find_family("jacobsthal"));
    CHECK(jac.term(2) == Poly(1));
    CHECK(jac.term(3) == P("2*x + 1"));

    CHECK_THROWS_AS(fib.term(-1), NegativeIndex);
}

TEST_CASE("closed forms") {
    CHECK(binet_term(*find_family("fibonacci"), 5) == P("x^4 + 3*x^2 + 1"));
    CHECK(binet_term(*find_family("lucas"), 0) == Poly(2));
    CHECK(binet_term(*find_family("chebyshev-first"), 2) == P("2*x^2 - 1"));
    CHECK(binet_term(*find_family("pell-lucas-prime"), 2) == P("2*x^2 + 1"));
    CHECK_THROWS_AS(binet_term(*find_family("pell"), -3), NegativeIndex);
}

TEST_CASE("recurrence and closed form agree through n = 32") {
    for (const FamilySpec& fam : registry()) {
        INFO(fam.name);
        SequenceCache seq(fam);
        for (std::int64_t n = 0; n <= 32; ++n) REQUIRE(binet_term(fam, n) == seq.term(n));
    }
}

TEST_CASE("degree growth of fibonacci-type terms") {
    for (const FamilySpec& fam : registry()) {
        if (fam.kind != Kind::FibonacciType) continue;
        const auto dd = fam.d.degree();
        if (!dd || *dd < 1) continue;  // jacobsthal has constant d
        SequenceCache seq(fam);
        for (std::int64_t n = 1; n <= 20; ++n) {
            INFO(fam.name << " n=" << n);
            REQUIRE(*seq.term(n).degree() == static_cast<std::size_t>(n - 1) * *dd);
        }
    }
}

TEST_CASE("pair cross checks through n = 32") {
    for (const FamilyPair& pair : table_pairs()) {
        INFO(pair.label);
        SequenceCache gp(*pair.fib), gs(*pair.lucas);
        const Poly alpha(pair.lucas->alpha);
        const Poly& g = pair.lucas->g;
        // alpha*Gs_n = Gp_{n+1} + g*Gp_{n-1}
        for (std::int64_t n = 1; n <= 32; ++n)
            REQUIRE(alpha * gs.term(n) == gp.term(n + 1) + g * gp.term(n - 1));
        // Cassini sign pattern: Gp_{n+1}Gp_{n-1} - Gp_n^2 = (-1)^n g^(n-1)
        for (std::int64_t n = 1; n <= 32; ++n) {
            Poly expected = pow(g, static_cast<std::uint64_t>(n - 1));
            if (n % 2 != 0) expected = -expected;
            REQUIRE(gp.term(n + 1) * gp.term(n - 1) - gp.term(n) * gp.term(n) == expected);
        }
    }
}

TEST_CASE("check_family passes for the whole registry") {
    for (const FamilySpec& fam : registry()) {
        INFO(fam.name);
        CHECK(check_family(fam).all_pass());
    }
}

TEST_CASE("check_family catches a corrupted entry") {
    FamilySpec bad = *find_family("fibonacci");
    bad.p1 = Poly::x();  // recurrence no longer matches the closed form
    CHECK(!check_family(bad).all_pass());

    FamilySpec bad_alpha = *find_family("lucas");
    bad_alpha.alpha = 2;
    CHECK(!check_family(bad_alpha).all_pass());
}

TEST_CASE("a wrong alpha surfaces as an inexact division") {
    FamilySpec bad = *find_family("lucas");
    bad.alpha = 2;  // (a + b)/2 = x/2 is not an integer polynomial
    CHECK_THROWS_AS(binet_term(bad, 1), InexactAlphaDivision);
}
