// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <utility>

#include "gfpkit/family.hpp"
#include "gfpkit/identity/ast.hpp"
#include "gfpkit/quad.hpp"
#include "gfpkit/sequence.hpp"

namespace gfpkit {

/// Everything needed to evaluate identity expressions over one equivalent
/// pair: the coefficient polynomials, the root difference S = a - b as an
/// extension-ring element, and memoized sequence caches for both members.
/// Owns mutable caches, so each verification worker builds its own.
class PairContext {
public:
    explicit PairContext(const FamilyPair& pair);

    const FamilyPair& pair() const { return *pair_; }
    const std::string& label() const { return pair_->label; }
    int alpha() const { return pair_->lucas->alpha; }
    const Poly& modulus() const { return modulus_; }

    QuadElem scalar(Poly p) const { return QuadElem::scalar(std::move(p), modulus_); }
    const QuadElem& root_diff() const { return s_; }
    const Poly& delta() const { return pair_->lucas->delta; }
    const Poly& d() const { return pair_->lucas->d; }
    const Poly& g() const { return pair_->lucas->g; }

    const Poly& fib_term(std::int64_t n) { return fib_seq_.term(n); }
    const Poly& lucas_term(std::int64_t n) { return lucas_seq_.term(n); }

private:
    const FamilyPair* pair_;
    Poly modulus_;
    QuadElem s_;
    SequenceCache fib_seq_;
    SequenceCache lucas_seq_;
};

/// Resolves every index expression of the identity against the assignment,
/// returning ground (variable-free) copies of both sides. Throws
/// ConstraintViolated when the assignment fails a constraint and
/// NegativeSubscript when a subscript or exponent resolves below zero.
/// The verifier binds the pseudo-variable "alpha" before calling this.
std::pair<Expr, Expr> instantiate(const IdentityDef& def, const Assignment& assignment);

/// Exact evaluation of a ground expression in the pair's extension ring.
/// Pure-polynomial subexpressions carry a zero radical part; sqrt nodes
/// require a polynomial radicand (else NonPolynomialRadicand) and take the
/// exact positive-leading-coefficient root (else NotASquare).
QuadElem eval_expr(const Expr& ground, PairContext& ctx);

}  // namespace gfpkit
