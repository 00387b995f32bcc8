// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "gfpkit/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace gfpkit {

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["pair"] = r.pair;
    j["tuples_checked"] = r.tuples_checked;
    j["status"] = std::string(status_name(r.status));
    if (r.counterexample) {
        nlohmann::ordered_json cx;
        nlohmann::ordered_json vars = nlohmann::ordered_json::object();
        for (const auto& [name, value] : r.counterexample->assignment) vars[name] = value;
        cx["assignment"] = std::move(vars);
        cx["lhs"] = r.counterexample->lhs.str();
        cx["rhs"] = r.counterexample->rhs.str();
        j["counterexample"] = std::move(cx);
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports) arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
}

std::string reports_to_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    for (const VerificationReport& r : reports) {
        out << r.id << "\t" << r.pair << "\t" << status_name(r.status) << "\t"
            << r.tuples_checked << " tuples";
        if (r.counterexample) {
            out << "\tcounterexample:";
            for (const auto& [name, value] : r.counterexample->assignment)
                out << " " << name << "=" << value;
            out << " lhs = " << r.counterexample->lhs.str()
                << " rhs = " << r.counterexample->rhs.str();
        }
        out << "\n";
    }
    return out.str();
}

ReportSummary summarize(const std::vector<VerificationReport>& reports) {
    ReportSummary s;
    for (const VerificationReport& r : reports) {
        switch (r.status) {
            case Status::pass:
                ++s.passed;
                break;
            case Status::fail:
                ++s.failed;
                break;
            case Status::not_applicable:
                ++s.not_applicable;
                break;
        }
    }
    return s;
}

std::string ReportSummary::str() const {
    std::ostringstream out;
    out << passed << " passed, " << failed << " failed, " << not_applicable << " not_applicable";
    return out.str();
}

}  // namespace gfpkit
