// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfpkit/family.hpp"
#include "gfpkit/identity/ast.hpp"
#include "gfpkit/identity/eval.hpp"

namespace gfpkit {

enum class Status { pass, fail, not_applicable };

std::string_view status_name(Status s);

struct Counterexample {
    Assignment assignment;
    QuadElem lhs;
    QuadElem rhs;
};

/// Outcome of one (identity, pair) verification. tuples_checked counts
/// conclusive comparisons only: tuples excluded by constraints, negative
/// subscripts or an inexact radical do not contribute.
struct VerificationReport {
    std::string id;
    std::string pair;
    std::int64_t tuples_checked = 0;
    Status status = Status::not_applicable;
    std::optional<Counterexample> counterexample;
};

/// Exhaustively instantiates the identity over the index grid and compares
/// both sides exactly. Every variable ranges over [0, grid_bound] unless the
/// identity carries a range override; equality constraints are solved for
/// one variable instead of enumerated. Verification stops at the first
/// mismatching tuple (deterministic: the enumeration order is fixed by the
/// vars declaration). Status is:
///   - fail            some tuple evaluated to different sides,
///   - pass            at least one tuple was conclusive and all agreed,
///   - not_applicable  no tuple was conclusive (constraints exclude the whole
///                     grid, or every admissible tuple had an inexact radical).
VerificationReport verify_identity(const IdentityDef& def, const FamilyPair& pair,
                                   std::int64_t grid_bound);

/// Same, reusing a caller-owned context (and its memoized sequences).
VerificationReport verify_identity(const IdentityDef& def, PairContext& ctx,
                                   std::int64_t grid_bound);

/// Full cross product: one report per (identity, pair), in corpus-major
/// order. Work is distributed over `jobs` worker threads; reports are merged
/// in task order, so output is byte-for-byte independent of `jobs`.
std::vector<VerificationReport> verify_corpus(const std::vector<IdentityDef>& corpus,
                                              const std::vector<FamilyPair>& pairs,
                                              std::int64_t grid_bound, int jobs);

}  // namespace gfpkit
