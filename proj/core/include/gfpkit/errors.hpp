// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gfpkit {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- polynomial ring ------------------------------------------------------

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by the zero polynomial") {}
};

struct NotDivisible : Error {
    using Error::Error;
};

struct NotASquare : Error {
    using Error::Error;
};

struct BothZero : Error {
    BothZero() : Error("gcd of two zero polynomials") {}
};

// -- quadratic extension ---------------------------------------------------

struct DeltaMismatch : Error {
    using Error::Error;
};

// -- sequences -------------------------------------------------------------

struct NegativeIndex : Error {
    explicit NegativeIndex(std::int64_t n)
        : Error("sequence index must be nonnegative, got " + std::to_string(n)) {}
};

struct NonZeroRadicalPart : Error {
    using Error::Error;
};

struct InexactAlphaDivision : Error {
    using Error::Error;
};

struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& name) : Error("unknown family: " + name) {}
};

// -- identity DSL ----------------------------------------------------------

/// Syntax error with 1-based line/column into the offending source.
struct SyntaxError : Error {
    SyntaxError(std::string msg, int line, int column, std::string source = {})
        : Error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" +
                std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct UnknownSymbol : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& name) : Error("unbound variable: " + name) {}
};

// -- instantiation / evaluation ---------------------------------------------

struct ConstraintViolated : Error {
    using Error::Error;
};

struct NegativeSubscript : Error {
    using Error::Error;
};

struct NonPolynomialRadicand : Error {
    NonPolynomialRadicand() : Error("radicand has a nonzero radical component") {}
};

}  // namespace gfpkit
