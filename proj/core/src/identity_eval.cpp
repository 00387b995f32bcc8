// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "gfpkit/identity/eval.hpp"

#include "gfpkit/errors.hpp"

namespace gfpkit {

PairContext::PairContext(const FamilyPair& pair)
    : pair_(&pair),
      modulus_(pair.lucas->binet_modulus),
      s_(QuadElem::scalar(Poly(), modulus_)),
      fib_seq_(*pair.fib),
      lucas_seq_(*pair.lucas) {
    auto [a, b] = roots_of(*pair.lucas);
    s_ = a - b;
}

namespace {

IndexExpr resolve_index(const IndexExpr& idx, const Assignment& assignment, const char* role) {
    const std::int64_t value = idx.eval(assignment);
    if (value < 0)
        throw NegativeSubscript(std::string(role) + " " + idx.str() + " resolves to " +
                                std::to_string(value));
    return IndexExpr::constant(value);
}

Expr resolve(const Expr& e, const Assignment& assignment) {
    switch (e.kind()) {
        case Expr::Kind::GpTerm:
            return Expr::gp(resolve_index(e.index(), assignment, "subscript"));
        case Expr::Kind::GsTerm:
            return Expr::gs(resolve_index(e.index(), assignment, "subscript"));
        case Expr::Kind::Pow:
            return Expr::pow(resolve(e.kids()[0], assignment),
                             resolve_index(e.index(), assignment, "exponent"));
        case Expr::Kind::Add:
            return Expr::add(resolve(e.kids()[0], assignment), resolve(e.kids()[1], assignment));
        case Expr::Kind::Sub:
            return Expr::sub(resolve(e.kids()[0], assignment), resolve(e.kids()[1], assignment));
        case Expr::Kind::Mul:
            return Expr::mul(resolve(e.kids()[0], assignment), resolve(e.kids()[1], assignment));
        case Expr::Kind::Neg:
            return Expr::neg(resolve(e.kids()[0], assignment));
        case Expr::Kind::Sqrt:
            return Expr::sqrt(resolve(e.kids()[0], assignment));
        default:
            return e;
    }
}

}  // namespace

std::pair<Expr, Expr> instantiate(const IdentityDef& def, const Assignment& assignment) {
    for (const Constraint& c : def.constraints)
        if (!c.holds(assignment))
            throw ConstraintViolated("assignment violates '" + c.str() + "' for " + def.id);
    return {resolve(def.lhs, assignment), resolve(def.rhs, assignment)};
}

QuadElem eval_expr(const Expr& ground, PairContext& ctx) {
    switch (ground.kind()) {
        case Expr::Kind::GpTerm:
            return ctx.scalar(ctx.fib_term(ground.index().eval({})));
        case Expr::Kind::GsTerm:
            return ctx.scalar(ctx.lucas_term(ground.index().eval({})));
        case Expr::Kind::SymD:
            return ctx.scalar(ctx.d());
        case Expr::Kind::SymG:
            return ctx.scalar(ctx.g());
        case Expr::Kind::SymAlpha:
            return ctx.scalar(Poly(ctx.alpha()));
        case Expr::Kind::SymDelta:
            return ctx.scalar(ctx.delta());
        case Expr::Kind::SymS:
            return ctx.root_diff();
        case Expr::Kind::Literal:
            return ctx.scalar(Poly(ground.literal_value()));
        case Expr::Kind::Add:
            return eval_expr(ground.kids()[0], ctx) + eval_expr(ground.kids()[1], ctx);
        case Expr::Kind::Sub:
            return eval_expr(ground.kids()[0], ctx) - eval_expr(ground.kids()[1], ctx);
        case Expr::Kind::Mul:
            return eval_expr(ground.kids()[0], ctx) * eval_expr(ground.kids()[1], ctx);
        case Expr::Kind::Neg:
            return -eval_expr(ground.kids()[0], ctx);
        case Expr::Kind::Pow: {
            const std::int64_t e = ground.index().eval({});
            if (e < 0) throw NegativeSubscript("exponent resolves to " + std::to_string(e));
            return pow(eval_expr(ground.kids()[0], ctx), static_cast<std::uint64_t>(e));
        }
        case Expr::Kind::Sqrt: {
            const QuadElem radicand = eval_expr(ground.kids()[0], ctx);
            if (!radicand.is_poly()) throw NonPolynomialRadicand();
            return ctx.scalar(sqrt_exact(radicand.u()));
        }
    }
    throw Error("internal: bad expression kind");
}

}  // namespace gfpkit
