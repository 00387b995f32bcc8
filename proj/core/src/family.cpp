// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "gfpkit/family.hpp"

#include <algorithm>

#include "gfpkit/errors.hpp"

namespace gfpkit {

std::string_view kind_name(Kind k) {
    return k == Kind::FibonacciType ? "fibonacci-type" : "lucas-type";
}

namespace {

bool all_coeffs_even(const Poly& p) {
    for (const Rational& c : p.coeffs()) {
        if (!is_integer(c)) return false;
        if (c.get_num() % 2 != 0) return false;
    }
    return true;
}

Poly derive_modulus(const Poly& d, const Poly& g) {
    if (!d.is_zero() && all_coeffs_even(d)) {
        Poly half = exact_div(d, Poly(2));
        return half * half + g;
    }
    return d * d + Poly(4) * g;
}

FamilySpec make(std::string name, Kind kind, Poly p0, Poly p1, Poly d, Poly g, int alpha,
                std::optional<std::string> partner) {
    Poly delta = d * d + Poly(4) * g;
    Poly modulus = derive_modulus(d, g);
    return FamilySpec{std::move(name),  kind,
                      std::move(p0),    std::move(p1),
                      std::move(d),     std::move(g),
                      alpha,            std::move(delta),
                      std::move(partner), std::move(modulus)};
}

std::vector<FamilySpec> build_registry() {
    const Poly x = Poly::x();
    const Poly two_x = Poly(2) * x;
    const Poly three_x = Poly(3) * x;
    const Poly x_plus_2 = x + Poly(2);

    std::vector<FamilySpec> fams;
    fams.push_back(make("fibonacci", Kind::FibonacciType, 0, 1, x, 1, 1, "lucas"));
    fams.push_back(make("lucas", Kind::LucasType, 2, x, x, 1, 1, "fibonacci"));
    fams.push_back(make("pell", Kind::FibonacciType, 0, 1, two_x, 1, 2, "pell-lucas-prime"));
    fams.push_back(make("pell-lucas", Kind::LucasType, 2, two_x, two_x, 1, 1, std::nullopt));
    fams.push_back(make("pell-lucas-prime", Kind::LucasType, 1, x, two_x, 1, 2, "pell"));
    fams.push_back(make("fermat", Kind::FibonacciType, 0, 1, three_x, -2, 1, "fermat-lucas"));
    fams.push_back(make("fermat-lucas", Kind::LucasType, 2, three_x, three_x, -2, 1, "fermat"));
    fams.push_back(
        make("chebyshev-second", Kind::FibonacciType, 0, 1, two_x, -1, 2, "chebyshev-first"));
    fams.push_back(make("chebyshev-first", Kind::LucasType, 1, x, two_x, -1, 2, "chebyshev-second"));
    fams.push_back(make("jacobsthal", Kind::FibonacciType, 0, 1, 1, two_x, 1, "jacobsthal-lucas"));
    fams.push_back(make("jacobsthal-lucas", Kind::LucasType, 2, 1, 1, two_x, 1, "jacobsthal"));
    fams.push_back(make("morgan-voyce-b", Kind::FibonacciType, 0, 1, x_plus_2, -1, 1, "morgan-voyce-c"));
    fams.push_back(make("morgan-voyce-c", Kind::LucasType, 2, x_plus_2, x_plus_2, -1, 1, "morgan-voyce-b"));
    return fams;
}

}  // namespace

const std::vector<FamilySpec>& registry() {
    static const std::vector<FamilySpec> fams = build_registry();
    return fams;
}

const FamilySpec* find_family(std::string_view name) {
    for (const FamilySpec& f : registry())
        if (f.name == name) return &f;
    return nullptr;
}

const std::vector<FamilyPair>& table_pairs() {
    static const std::vector<FamilyPair> pairs = [] {
        std::vector<FamilyPair> ps;
        for (const FamilySpec& f : registry()) {
            if (f.kind != Kind::LucasType || !f.partner) continue;
            const FamilySpec* fib = find_family(*f.partner);
            ps.push_back(FamilyPair{&f, fib, f.name + "/" + fib->name});
        }
        return ps;
    }();
    return pairs;
}

const FamilyPair* find_pair(std::string_view selector) {
    for (const FamilyPair& p : table_pairs()) {
        if (p.label == selector || p.lucas->name == selector || p.fib->name == selector) return &p;
    }
    return nullptr;
}

std::string validate_family(const FamilySpec& fam) {
    if (fam.d.is_zero() || fam.g.is_zero()) return "d and g must be nonzero";
    if (gcd(fam.d, fam.g) != Poly(1)) return "gcd(d, g) is not a unit";
    if (fam.kind == Kind::FibonacciType) {
        if (!fam.p0.is_zero() || fam.p1 != Poly(1)) return "fibonacci-type requires p0 = 0, p1 = 1";
    } else {
        if (Poly(2) * fam.p1 != fam.p0 * fam.d) return "lucas-type requires 2*p1 = p0*d";
        if (fam.p0 != Poly(1) && fam.p0 != Poly(2) && fam.p0 != Poly(-1) && fam.p0 != Poly(-2))
            return "lucas-type requires |p0| in {1, 2}";
    }
    if (fam.alpha != 1 && fam.alpha != 2) return "alpha must be 1 or 2";
    if (fam.delta != fam.d * fam.d + Poly(4) * fam.g) return "delta != d^2 + 4g";
    if (fam.partner) {
        const FamilySpec* other = find_family(*fam.partner);
        if (!other) return "partner not registered: " + *fam.partner;
        if (other->kind == fam.kind) return "partner must be of the opposite kind";
        if (other->d != fam.d || other->g != fam.g) return "partner has different d or g";
        if (!other->partner || *other->partner != fam.name) return "partner link is not symmetric";
    }
    return {};
}

std::pair<QuadElem, QuadElem> roots_of(const FamilySpec& fam) {
    // a = (d + sqrt(d^2 + 4g)) / 2; with every coefficient of d even the
    // radical reduces to 2*sqrt((d/2)^2 + g) and the halves cancel.
    Poly u;
    Poly v;
    if (all_coeffs_even(fam.d)) {
        u = exact_div(fam.d, Poly(2));
        v = Poly(1);
    } else {
        u = exact_div(fam.d, Poly(2));
        v = Poly(Rational(1, 2));
    }
    QuadElem a(u, v, fam.binet_modulus);
    return {a, conj(a)};
}

}  // namespace gfpkit
