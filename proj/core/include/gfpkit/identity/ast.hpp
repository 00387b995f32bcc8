// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gfpkit/rational.hpp"

namespace gfpkit {

/// Values for the free index variables of one identity instantiation. The
/// pseudo-variable "alpha" is bound by the verifier before enumeration so
/// family guards like "alpha = 1" can be written as ordinary constraints.
using Assignment = std::map<std::string, std::int64_t, std::less<>>;

/// Integer expression over index variables: sums, differences and products
/// of variables and integer literals (subscripts like 2n+1 or j*(k+u)+r+v).
class IndexExpr {
public:
    enum class Kind { Constant, Variable, Add, Sub, Mul, Neg };

    IndexExpr() : kind_(Kind::Constant) {}

    static IndexExpr constant(std::int64_t v);
    static IndexExpr variable(std::string name);
    static IndexExpr add(IndexExpr a, IndexExpr b);
    static IndexExpr sub(IndexExpr a, IndexExpr b);
    static IndexExpr mul(IndexExpr a, IndexExpr b);
    static IndexExpr neg(IndexExpr a);

    Kind kind() const { return kind_; }
    std::int64_t constant_value() const { return value_; }
    const std::string& variable_name() const { return var_; }
    const std::vector<IndexExpr>& kids() const { return kids_; }

    bool is_constant() const { return kind_ == Kind::Constant; }

    /// Throws UnboundVariable when a referenced variable is missing.
    std::int64_t eval(const Assignment& assignment) const;

    void collect_vars(std::set<std::string>& out) const;

    std::string str() const;

    bool operator==(const IndexExpr& other) const;
    bool operator!=(const IndexExpr& other) const { return !(*this == other); }

private:
    Kind kind_;
    std::int64_t value_ = 0;
    std::string var_;
    std::vector<IndexExpr> kids_;

    std::string str_prec(int parent_prec) const;
};

/// Expression tree of one identity side. Gp[...] is a Fibonacci-type
/// sequence term, Gs[...] a Lucas-type one; d, g, alpha, Delta and S are
/// the coefficient symbols of the governing pair (S being the root
/// difference a - b, whose square is Delta).
class Expr {
public:
    enum class Kind {
        GpTerm,   // Gp[index]
        GsTerm,   // Gs[index]
        SymD,
        SymG,
        SymAlpha,
        SymDelta,
        SymS,
        Literal,  // rational constant
        Add,
        Sub,
        Mul,
        Neg,
        Pow,      // kids[0] ^ index
        Sqrt,     // sqrt(kids[0])
    };

    Expr() : kind_(Kind::Literal), lit_(0) {}

    static Expr gp(IndexExpr idx);
    static Expr gs(IndexExpr idx);
    static Expr sym(Kind k);
    static Expr literal(Rational value);
    static Expr add(Expr a, Expr b);
    static Expr sub(Expr a, Expr b);
    static Expr mul(Expr a, Expr b);
    static Expr neg(Expr a);
    static Expr pow(Expr base, IndexExpr exponent);
    static Expr sqrt(Expr radicand);

    Kind kind() const { return kind_; }
    const Rational& literal_value() const { return lit_; }
    const IndexExpr& index() const { return idx_; }
    const std::vector<Expr>& kids() const { return kids_; }

    void collect_vars(std::set<std::string>& out) const;

    std::string str() const;

    bool operator==(const Expr& other) const;
    bool operator!=(const Expr& other) const { return !(*this == other); }

private:
    Kind kind_;
    Rational lit_;
    IndexExpr idx_;
    std::vector<Expr> kids_;

    std::string str_prec(int parent_prec) const;
};

/// One linear (or product-form) comparison between index expressions.
struct Constraint {
    enum class Rel { Ge, Gt, Eq };

    IndexExpr lhs;
    Rel rel;
    IndexExpr rhs;

    bool holds(const Assignment& assignment) const;
    std::string str() const;

    bool operator==(const Constraint& other) const {
        return rel == other.rel && lhs == other.lhs && rhs == other.rhs;
    }
};

struct RangeOverride {
    std::int64_t lo;
    std::int64_t hi;

    bool operator==(const RangeOverride&) const = default;
};

/// A parsed identity: free variables, admissibility constraints, optional
/// per-variable range overrides and the two sides to compare.
struct IdentityDef {
    std::string id;
    std::vector<std::string> vars;
    std::vector<Constraint> constraints;
    std::map<std::string, RangeOverride> ranges;
    Expr lhs;
    Expr rhs;

    /// Canonical DSL text; parsing it back yields an equal definition.
    std::string str() const;

    bool operator==(const IdentityDef& other) const;
};

}  // namespace gfpkit
