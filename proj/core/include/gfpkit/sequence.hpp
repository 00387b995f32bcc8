// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "gfpkit/family.hpp"
#include "gfpkit/poly.hpp"

namespace gfpkit {

/// Memoized recurrence unroller for one family: term(n) returns G_n(x) and
/// grows the cache as needed. The cache is a deque so growing it never
/// invalidates previously returned references. Single-writer by design;
/// give each worker thread its own cache instead of sharing one.
class SequenceCache {
public:
    explicit SequenceCache(const FamilySpec& fam) : fam_(&fam) {}

    const FamilySpec& family() const { return *fam_; }

    /// G_n by the recurrence G_n = d*G_{n-1} + g*G_{n-2}. Throws
    /// NegativeIndex for n < 0.
    const Poly& term(std::int64_t n);

private:
    const FamilySpec* fam_;
    std::deque<Poly> terms_;
};

/// G_n through the closed form: (a^n + b^n)/alpha for Lucas-type families,
/// (a^n - b^n)/(a - b) for Fibonacci-type ones. Computed exactly in the
/// quadratic extension ring and projected back to a polynomial. Throws
/// NonZeroRadicalPart when the component that must cancel does not (a
/// corrupted registry entry), and InexactAlphaDivision when the result
/// fails to land in integer coefficients.
Poly binet_term(const FamilySpec& fam, std::int64_t n);

struct CheckItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct FamilyCheck {
    std::string family;
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const CheckItem& it : items)
            if (!it.pass) return false;
        return true;
    }
};

/// Diagnostic sweep over one family: structural invariants, the root
/// identities a+b = d, a*b = -g, (a-b)^2 = d^2+4g, the discriminant
/// expressed through the sequences (alpha*Gs_2 + 2g and Gp_3 + 3g), and
/// recurrence/Binet agreement for 0 <= n <= max_n.
FamilyCheck check_family(const FamilySpec& fam, std::int64_t max_n = 32);

}  // namespace gfpkit
