// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "gfpkit/sequence.hpp"

#include "gfpkit/errors.hpp"

namespace gfpkit {

const Poly& SequenceCache::term(std::int64_t n) {
    if (n < 0) throw NegativeIndex(n);
    if (terms_.empty()) {
        terms_.push_back(fam_->p0);
        terms_.push_back(fam_->p1);
    }
    while (static_cast<std::int64_t>(terms_.size()) <= n) {
        const std::size_t k = terms_.size();
        terms_.push_back(fam_->d * terms_[k - 1] + fam_->g * terms_[k - 2]);
    }
    return terms_[static_cast<std::size_t>(n)];
}

Poly binet_term(const FamilySpec& fam, std::int64_t n) {
    if (n < 0) throw NegativeIndex(n);
    auto [a, b] = roots_of(fam);
    const QuadElem an = pow(a, static_cast<std::uint64_t>(n));
    const QuadElem bn = pow(b, static_cast<std::uint64_t>(n));
    Poly result;
    if (fam.kind == Kind::LucasType) {
        const QuadElem sum = an + bn;
        if (!sum.v().is_zero())
            throw NonZeroRadicalPart("a^n + b^n has a radical part for family " + fam.name);
        result = exact_div(sum.u(), Poly(fam.alpha));
    } else {
        const QuadElem diff = an - bn;
        const QuadElem s = a - b;
        if (!diff.u().is_zero())
            throw NonZeroRadicalPart("a^n - b^n has a rational part for family " + fam.name);
        // (a^n - b^n) and (a - b) are both pure radical; their quotient is
        // the polynomial ratio of the radical coefficients.
        result = exact_div(diff.v(), s.v());
    }
    if (!result.has_integer_coeffs())
        throw InexactAlphaDivision("closed form of " + fam.name + " left non-integer coefficients at n=" +
                                   std::to_string(n));
    return result;
}

namespace {

void check_eq(FamilyCheck& out, const std::string& name, const Poly& got, const Poly& want) {
    if (got == want)
        out.items.push_back({name, true, {}});
    else
        out.items.push_back({name, false, "got " + got.str() + ", want " + want.str()});
}

}  // namespace

FamilyCheck check_family(const FamilySpec& fam, std::int64_t max_n) {
    FamilyCheck out{fam.name, {}};

    std::string structural = validate_family(fam);
    out.items.push_back({"structural-invariants", structural.empty(), structural});

    auto [a, b] = roots_of(fam);
    const QuadElem sum = a + b;
    const QuadElem prod = a * b;
    const QuadElem diff2 = (a - b) * (a - b);
    out.items.push_back({"a+b = d", sum.is_poly() && sum.u() == fam.d, sum.str()});
    out.items.push_back({"a*b = -g", prod.is_poly() && prod.u() == -fam.g, prod.str()});
    out.items.push_back(
        {"(a-b)^2 = d^2+4g", diff2.is_poly() && diff2.u() == fam.delta, diff2.str()});

    // Discriminant through the sequences themselves. The Lucas-type side
    // works unpartnered; the Fibonacci-type side needs the equivalent family.
    const FamilySpec* lucas = fam.kind == Kind::LucasType ? &fam
                              : fam.partner              ? find_family(*fam.partner)
                                                         : nullptr;
    const FamilySpec* fib = fam.kind == Kind::FibonacciType ? &fam
                            : fam.partner                   ? find_family(*fam.partner)
                                                            : nullptr;
    if (lucas) {
        SequenceCache seq(*lucas);
        check_eq(out, "alpha*Gs_2 + 2g = delta", Poly(lucas->alpha) * seq.term(2) + Poly(2) * fam.g,
                 fam.delta);
    }
    if (fib) {
        SequenceCache seq(*fib);
        check_eq(out, "Gp_3 + 3g = delta", seq.term(3) + Poly(3) * fam.g, fam.delta);
    }

    SequenceCache seq(fam);
    bool agree = true;
    std::string detail;
    for (std::int64_t n = 0; n <= max_n; ++n) {
        Poly closed;
        try {
            closed = binet_term(fam, n);
        } catch (const Error& e) {
            agree = false;
            detail = std::string("n=") + std::to_string(n) + ": " + e.what();
            break;
        }
        if (closed != seq.term(n)) {
            agree = false;
            detail = "n=" + std::to_string(n) + ": recurrence " + seq.term(n).str() +
                     " vs closed form " + closed.str();
            break;
        }
    }
    out.items.push_back({"recurrence = closed form (n <= " + std::to_string(max_n) + ")", agree,
                         detail});
    return out;
}

}  // namespace gfpkit
