// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "gfpkit/identity/ast.hpp"

#include "gfpkit/errors.hpp"

namespace gfpkit {

// -- IndexExpr ---------------------------------------------------------------

IndexExpr IndexExpr::constant(std::int64_t v) {
    IndexExpr e;
    e.kind_ = Kind::Constant;
    e.value_ = v;
    return e;
}

IndexExpr IndexExpr::variable(std::string name) {
    IndexExpr e;
    e.kind_ = Kind::Variable;
    e.var_ = std::move(name);
    return e;
}

IndexExpr IndexExpr::add(IndexExpr a, IndexExpr b) {
    IndexExpr e;
    e.kind_ = Kind::Add;
    e.kids_.push_back(std::move(a));
    e.kids_.push_back(std::move(b));
    return e;
}

IndexExpr IndexExpr::sub(IndexExpr a, IndexExpr b) {
    IndexExpr e;
    e.kind_ = Kind::Sub;
    e.kids_.push_back(std::move(a));
    e.kids_.push_back(std::move(b));
    return e;
}

IndexExpr IndexExpr::mul(IndexExpr a, IndexExpr b) {
    IndexExpr e;
    e.kind_ = Kind::Mul;
    e.kids_.push_back(std::move(a));
    e.kids_.push_back(std::move(b));
    return e;
}

IndexExpr IndexExpr::neg(IndexExpr a) {
    IndexExpr e;
    e.kind_ = Kind::Neg;
    e.kids_.push_back(std::move(a));
    return e;
}

std::int64_t IndexExpr::eval(const Assignment& assignment) const {
    switch (kind_) {
        case Kind::Constant:
            return value_;
        case Kind::Variable: {
            auto it = assignment.find(var_);
            if (it == assignment.end()) throw UnboundVariable(var_);
            return it->second;
        }
        case Kind::Add:
            return kids_[0].eval(assignment) + kids_[1].eval(assignment);
        case Kind::Sub:
            return kids_[0].eval(assignment) - kids_[1].eval(assignment);
        case Kind::Mul:
            return kids_[0].eval(assignment) * kids_[1].eval(assignment);
        case Kind::Neg:
            return -kids_[0].eval(assignment);
    }
    throw Error("internal: bad index expression kind");
}

void IndexExpr::collect_vars(std::set<std::string>& out) const {
    if (kind_ == Kind::Variable) out.insert(var_);
    for (const IndexExpr& k : kids_) k.collect_vars(out);
}

std::string IndexExpr::str() const { return str_prec(0); }

std::string IndexExpr::str_prec(int parent_prec) const {
    // precedence: 1 additive, 2 multiplicative, 3 unary
    switch (kind_) {
        case Kind::Constant:
            if (value_ < 0 && parent_prec > 1) return "(" + std::to_string(value_) + ")";
            return std::to_string(value_);
        case Kind::Variable:
            return var_;
        case Kind::Add:
        case Kind::Sub: {
            std::string s = kids_[0].str_prec(1) + (kind_ == Kind::Add ? "+" : "-") +
                            kids_[1].str_prec(2);
            return parent_prec > 1 ? "(" + s + ")" : s;
        }
        case Kind::Mul: {
            std::string s = kids_[0].str_prec(2) + "*" + kids_[1].str_prec(3);
            return parent_prec > 2 ? "(" + s + ")" : s;
        }
        case Kind::Neg: {
            std::string s = "-" + kids_[0].str_prec(3);
            return parent_prec > 2 ? "(" + s + ")" : s;
        }
    }
    throw Error("internal: bad index expression kind");
}

bool IndexExpr::operator==(const IndexExpr& other) const {
    return kind_ == other.kind_ && value_ == other.value_ && var_ == other.var_ &&
           kids_ == other.kids_;
}

// -- Expr --------------------------------------------------------------------

Expr Expr::gp(IndexExpr idx) {
    Expr e;
    e.kind_ = Kind::GpTerm;
    e.idx_ = std::move(idx);
    return e;
}

Expr Expr::gs(IndexExpr idx) {
    Expr e;
    e.kind_ = Kind::GsTerm;
    e.idx_ = std::move(idx);
    return e;
}

Expr Expr::sym(Kind k) {
    Expr e;
    e.kind_ = k;
    return e;
}

Expr Expr::literal(Rational value) {
    Expr e;
    e.kind_ = Kind::Literal;
    e.lit_ = std::move(value);
    return e;
}

Expr Expr::add(Expr a, Expr b) {
    Expr e;
    e.kind_ = Kind::Add;
    e.kids_.push_back(std::move(a));
    e.kids_.push_back(std::move(b));
    return e;
}

Expr Expr::sub(Expr a, Expr b) {
    Expr e;
    e.kind_ = Kind::Sub;
    e.kids_.push_back(std::move(a));
    e.kids_.push_back(std::move(b));
    return e;
}

Expr Expr::mul(Expr a, Expr b) {
    Expr e;
    e.kind_ = Kind::Mul;
    e.kids_.push_back(std::move(a));
    e.kids_.push_back(std::move(b));
    return e;
}

Expr Expr::neg(Expr a) {
    Expr e;
    e.kind_ = Kind::Neg;
    e.kids_.push_back(std::move(a));
    return e;
}

Expr Expr::pow(Expr base, IndexExpr exponent) {
    Expr e;
    e.kind_ = Kind::Pow;
    e.kids_.push_back(std::move(base));
    e.idx_ = std::move(exponent);
    return e;
}

Expr Expr::sqrt(Expr radicand) {
    Expr e;
    e.kind_ = Kind::Sqrt;
    e.kids_.push_back(std::move(radicand));
    return e;
}

void Expr::collect_vars(std::set<std::string>& out) const {
    if (kind_ == Kind::GpTerm || kind_ == Kind::GsTerm || kind_ == Kind::Pow)
        idx_.collect_vars(out);
    for (const Expr& k : kids_) k.collect_vars(out);
}

std::string Expr::str() const { return str_prec(0); }

std::string Expr::str_prec(int parent_prec) const {
    // precedence: 1 additive, 2 multiplicative, 3 unary, 4 power
    switch (kind_) {
        case Kind::GpTerm:
            return "Gp[" + idx_.str() + "]";
        case Kind::GsTerm:
            return "Gs[" + idx_.str() + "]";
        case Kind::SymD:
            return "d";
        case Kind::SymG:
            return "g";
        case Kind::SymAlpha:
            return "alpha";
        case Kind::SymDelta:
            return "Delta";
        case Kind::SymS:
            return "S";
        case Kind::Literal: {
            std::string s = rational_str(lit_);
            if ((s.find('/') != std::string::npos || s[0] == '-') && parent_prec >= 2)
                return "(" + s + ")";
            return s;
        }
        case Kind::Add:
        case Kind::Sub: {
            std::string s =
                kids_[0].str_prec(1) + (kind_ == Kind::Add ? " + " : " - ") + kids_[1].str_prec(2);
            return parent_prec > 1 ? "(" + s + ")" : s;
        }
        case Kind::Mul: {
            std::string s = kids_[0].str_prec(2) + "*" + kids_[1].str_prec(3);
            return parent_prec > 2 ? "(" + s + ")" : s;
        }
        case Kind::Neg: {
            std::string s = "-" + kids_[0].str_prec(3);
            return parent_prec > 2 ? "(" + s + ")" : s;
        }
        case Kind::Pow: {
            std::string base = kids_[0].str_prec(4);
            std::string e = idx_.str();
            bool bare = idx_.kind() == IndexExpr::Kind::Variable ||
                        (idx_.kind() == IndexExpr::Kind::Constant && idx_.constant_value() >= 0);
            return base + "^" + (bare ? e : "(" + e + ")");
        }
        case Kind::Sqrt:
            return "sqrt(" + kids_[0].str() + ")";
    }
    throw Error("internal: bad expression kind");
}

bool Expr::operator==(const Expr& other) const {
    return kind_ == other.kind_ && lit_ == other.lit_ && idx_ == other.idx_ &&
           kids_ == other.kids_;
}

// -- Constraint / IdentityDef --------------------------------------------------

bool Constraint::holds(const Assignment& assignment) const {
    const std::int64_t a = lhs.eval(assignment);
    const std::int64_t b = rhs.eval(assignment);
    switch (rel) {
        case Rel::Ge:
            return a >= b;
        case Rel::Gt:
            return a > b;
        case Rel::Eq:
            return a == b;
    }
    return false;
}

std::string Constraint::str() const {
    const char* op = rel == Rel::Ge ? ">=" : rel == Rel::Gt ? ">" : "=";
    return lhs.str() + op + rhs.str();
}

std::string IdentityDef::str() const {
    std::string out = "identity " + id + "\n";
    if (!vars.empty()) {
        out += "vars";
        for (const std::string& v : vars) out += " " + v;
        out += "\n";
    }
    if (!constraints.empty()) {
        out += "constraints ";
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            if (i) out += "; ";
            out += constraints[i].str();
        }
        out += "\n";
    }
    for (const auto& [var, r] : ranges)
        out += "range " + var + " " + std::to_string(r.lo) + ".." + std::to_string(r.hi) + "\n";
    out += "lhs " + lhs.str() + "\n";
    out += "rhs " + rhs.str() + "\n";
    return out;
}

bool IdentityDef::operator==(const IdentityDef& other) const {
    return id == other.id && vars == other.vars && constraints == other.constraints &&
           ranges == other.ranges && lhs == other.lhs && rhs == other.rhs;
}

}  // namespace gfpkit
