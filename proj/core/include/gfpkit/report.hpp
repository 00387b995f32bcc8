// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <vector>

#include "gfpkit/identity/verify.hpp"

namespace gfpkit {

/// Stable JSON rendering of verification reports. One object per report with
/// fields, in order: id, pair, tuples_checked, status, counterexample
/// (null, or {assignment, lhs, rhs} with polynomials in the textual
/// format). Output bytes depend only on the reports, never on scheduling.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Human-readable fixed-order table, one line per report.
std::string reports_to_table(const std::vector<VerificationReport>& reports);

struct ReportSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t not_applicable = 0;

    std::string str() const;
};

ReportSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace gfpkit
