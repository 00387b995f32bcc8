// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// gfpkit command line: generate sequence terms, inspect the family
// registry, cross-check the closed forms against the recurrences, and run
// the identity corpus verifier.
//
// Exit codes (stable for CI): 0 success / all pass, 1 verification
// failures, 2 usage or parse errors, 3 invalid numeric arguments.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gfpkit/errors.hpp"
#include "gfpkit/family.hpp"
#include "gfpkit/identity/parser.hpp"
#include "gfpkit/identity/verify.hpp"
#include "gfpkit/report.hpp"
#include "gfpkit/sequence.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadNumber = 3;

const gfpkit::FamilySpec& family_or_die(const std::string& name) {
    const gfpkit::FamilySpec* fam = gfpkit::find_family(name);
    if (!fam) {
        std::cerr << "gfpkit: unknown family '" << name << "' (see `gfpkit families`)\n";
        std::exit(kExitUsage);
    }
    return *fam;
}

std::vector<const gfpkit::FamilySpec*> select_families(const std::string& selector) {
    std::vector<const gfpkit::FamilySpec*> out;
    if (selector == "all") {
        for (const gfpkit::FamilySpec& f : gfpkit::registry()) out.push_back(&f);
    } else {
        out.push_back(&family_or_die(selector));
    }
    return out;
}

int cmd_gen(const std::string& family, std::int64_t n) {
    if (n < 0) {
        std::cerr << "gfpkit: --n must be nonnegative\n";
        return kExitBadNumber;
    }
    gfpkit::SequenceCache seq(family_or_die(family));
    for (std::int64_t i = 0; i <= n; ++i) std::cout << seq.term(i).str() << "\n";
    return kExitOk;
}

int cmd_eval(const std::string& family, std::int64_t n, const std::string& x) {
    if (n < 0) {
        std::cerr << "gfpkit: --n must be nonnegative\n";
        return kExitBadNumber;
    }
    gfpkit::Rational x0;
    try {
        x0 = gfpkit::parse_rational(x);
    } catch (const gfpkit::Error& e) {
        std::cerr << "gfpkit: " << e.what() << "\n";
        return kExitBadNumber;
    }
    gfpkit::SequenceCache seq(family_or_die(family));
    std::cout << gfpkit::rational_str(seq.term(n).eval(x0)) << "\n";
    return kExitOk;
}

int cmd_families(const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const gfpkit::FamilySpec& f : gfpkit::registry()) {
            nlohmann::ordered_json j;
            j["name"] = f.name;
            j["kind"] = std::string(gfpkit::kind_name(f.kind));
            j["p0"] = f.p0.str();
            j["p1"] = f.p1.str();
            j["d"] = f.d.str();
            j["g"] = f.g.str();
            j["alpha"] = f.alpha;
            j["delta"] = f.delta.str();
            if (f.partner)
                j["partner"] = *f.partner;
            else
                j["partner"] = nullptr;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
    }
    for (const gfpkit::FamilySpec& f : gfpkit::registry()) {
        std::cout << f.name << "\t" << gfpkit::kind_name(f.kind) << "\tp0 = " << f.p0.str()
                  << "\tp1 = " << f.p1.str() << "\td = " << f.d.str() << "\tg = " << f.g.str()
                  << "\talpha = " << f.alpha << "\tdelta = " << f.delta.str();
        if (f.partner) std::cout << "\tpartner = " << *f.partner;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_binet_check(const std::string& selector, std::int64_t max_n) {
    if (max_n < 0) {
        std::cerr << "gfpkit: --max-n must be nonnegative\n";
        return kExitBadNumber;
    }
    bool ok = true;
    for (const gfpkit::FamilySpec* fam : select_families(selector)) {
        gfpkit::FamilyCheck check = gfpkit::check_family(*fam, max_n);
        if (check.all_pass()) {
            std::cout << fam->name << ": pass (" << check.items.size() << " checks)\n";
            continue;
        }
        ok = false;
        std::cout << fam->name << ": FAIL\n";
        for (const gfpkit::CheckItem& item : check.items)
            if (!item.pass) std::cout << "  " << item.name << ": " << item.detail << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(std::string corpus_dir, const std::string& families, const std::string& identity,
               std::int64_t grid_bound, int jobs, const std::string& format) {
    if (grid_bound < 1) {
        std::cerr << "gfpkit: --max-index must be >= 1\n";
        return kExitBadNumber;
    }
    if (jobs < 1) {
        std::cerr << "gfpkit: --jobs must be >= 1\n";
        return kExitBadNumber;
    }
    if (corpus_dir.empty()) {
        if (const char* env = std::getenv("GFPKIT_CORPUS"))
            corpus_dir = env;
        else
            corpus_dir = "corpus";
    }

    std::vector<gfpkit::IdentityDef> corpus;
    try {
        corpus = gfpkit::load_corpus(corpus_dir);
    } catch (const gfpkit::Error& e) {
        std::cerr << "gfpkit: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!identity.empty()) {
        std::erase_if(corpus, [&](const gfpkit::IdentityDef& d) { return d.id != identity; });
        if (corpus.empty()) {
            std::cerr << "gfpkit: no identity '" << identity << "' in the corpus\n";
            return kExitUsage;
        }
    }

    std::vector<gfpkit::FamilyPair> pairs;
    if (families == "all") {
        pairs = gfpkit::table_pairs();
    } else {
        const gfpkit::FamilyPair* pair = gfpkit::find_pair(families);
        if (!pair) {
            std::cerr << "gfpkit: no equivalent pair matches '" << families << "'\n";
            return kExitUsage;
        }
        pairs.push_back(*pair);
    }

    const auto reports = gfpkit::verify_corpus(corpus, pairs, grid_bound, jobs);
    const gfpkit::ReportSummary summary = gfpkit::summarize(reports);
    if (format == "json") {
        std::cout << gfpkit::reports_to_json(reports);
        std::cerr << "summary: " << summary.str() << "\n";
    } else {
        std::cout << gfpkit::reports_to_table(reports);
        std::cout << "summary: " << summary.str() << "\n";
    }
    return summary.failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized Fibonacci polynomial toolkit"};
    app.require_subcommand(1);

    std::string family = "all";
    std::string families = "all";
    std::string identity;
    std::string corpus_dir;
    std::string format = "text";
    std::string x_value = "1";
    std::int64_t n = 8;
    std::int64_t max_n = 32;
    std::int64_t max_index = 8;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    CLI::App* gen = app.add_subcommand("gen", "print G_0..G_n for one family");
    gen->add_option("--family", family)->required();
    gen->add_option("--n", n)->required();

    CLI::App* binet =
        app.add_subcommand("binet-check", "check closed forms against the recurrences");
    binet->add_option("--family", family);
    binet->add_option("--max-n", max_n);

    CLI::App* verify = app.add_subcommand("verify", "verify the identity corpus");
    verify->add_option("--corpus", corpus_dir, "corpus directory (or $GFPKIT_CORPUS)");
    verify->add_option("--families", families, "pair selector or 'all'");
    verify->add_option("--identity", identity, "verify a single identity id");
    verify->add_option("--max-index", max_index, "index grid bound");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* fams = app.add_subcommand("families", "list the registered families");
    fams->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* eval = app.add_subcommand("eval", "evaluate G_n at a rational point");
    eval->add_option("--family", family)->required();
    eval->add_option("--n", n)->required();
    eval->add_option("--x", x_value)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, n);
        if (binet->parsed()) return cmd_binet_check(family, max_n);
        if (verify->parsed())
            return cmd_verify(corpus_dir, families, identity, max_index, jobs, format);
        if (fams->parsed()) return cmd_families(format);
        if (eval->parsed()) return cmd_eval(family, n, x_value);
    } catch (const gfpkit::Error& e) {
        std::cerr << "gfpkit: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
