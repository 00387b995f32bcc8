// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfpkit/poly.hpp"
#include "gfpkit/quad.hpp"

namespace gfpkit {

/// The two shapes of initial conditions a generalized Fibonacci sequence
/// may have. Fibonacci type: G0 = 0, G1 = 1. Lucas type: 2*p1 = p0*d with
/// |p0| in {1, 2}.
enum class Kind { FibonacciType, LucasType };

std::string_view kind_name(Kind k);

/// One registered sequence family: G_n = d*G_{n-1} + g*G_{n-2} with the
/// given initial values. `alpha` is the Lucas-type Binet normalization
/// (a^n + b^n)/alpha; it equals 2/p0 for Lucas-type families and is carried
/// on Fibonacci-type families as the value of their partnered Lucas family.
struct FamilySpec {
    std::string name;
    Kind kind;
    Poly p0;
    Poly p1;
    Poly d;
    Poly g;
    int alpha;
    Poly delta;  // d^2 + 4g
    std::optional<std::string> partner;

    /// Modulus of the ring the Binet roots live in: (d/2)^2 + g when every
    /// coefficient of d is even, d^2 + 4g otherwise. Both choices square the
    /// root difference a - b to delta; the reduced form keeps the radicand
    /// primitive.
    Poly binet_modulus;
};

/// All thirteen built-in families, in registry order.
const std::vector<FamilySpec>& registry();

/// Case-sensitive lookup; nullptr when the name is not registered.
const FamilySpec* find_family(std::string_view name);

/// A Lucas-type family and the Fibonacci-type family sharing its d and g.
struct FamilyPair {
    const FamilySpec* lucas;
    const FamilySpec* fib;
    std::string label;  // "<lucas-name>/<fib-name>"
};

/// The six partnered pairs, in registry order of the Lucas member.
const std::vector<FamilyPair>& table_pairs();

/// Finds the pair whose label or either member name matches; nullptr otherwise.
const FamilyPair* find_pair(std::string_view selector);

/// Structural invariants of a family entry (gcd(d,g) = 1, initial-value
/// shape for its kind, delta consistency, partner symmetry). Returns a
/// description of the first violation, or empty when everything holds.
std::string validate_family(const FamilySpec& fam);

/// The Binet roots (a, b) as elements of Q(x)[s]/(s^2 - binet_modulus),
/// with a + b = d and a*b = -g.
std::pair<QuadElem, QuadElem> roots_of(const FamilySpec& fam);

}  // namespace gfpkit
