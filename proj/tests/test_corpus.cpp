// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include <filesystem>
#include <set>

#include "gfpkit/identity/parser.hpp"
#include "gfpkit/identity/verify.hpp"

using namespace gfpkit;

namespace {

std::set<std::string> expected_ids() {
    std::set<std::string> ids = {"P1.1", "P1.2", "P1.3", "P1.4", "P2.1", "P2.2"};
    for (int k = 1; k <= 94; ++k) ids.insert("I" + std::to_string(k));
    return ids;
}

}  // namespace

TEST_CASE("manifest and directory agree on exactly 100 identities") {
    const auto manifest = load_manifest(GFPKIT_CORPUS_DIR);
    const auto want = expected_ids();
    REQUIRE(manifest.size() == 100);
    for (const std::string& id : want) {
        INFO(id);
        REQUIRE(manifest.count(id) == 1);
    }
    for (const auto& [id, entry] : manifest) {
        INFO(id);
        if (id[0] == 'P') {
            CHECK(entry.proposition == id[1] - '0');
            CHECK(entry.part == std::stoi(id.substr(3)));
        } else {
            CHECK(entry.proposition == 3);
            CHECK(entry.part == std::stoi(id.substr(1)));
        }
    }

    // every .gfpid file in the directory is in the manifest, and vice versa
    std::set<std::string> on_disk;
    for (const auto& entry : std::filesystem::directory_iterator(GFPKIT_CORPUS_DIR))
        if (entry.path().extension() == ".gfpid") on_disk.insert(entry.path().stem().string());
    CHECK(on_disk == want);
}

TEST_CASE("the whole corpus parses and ids match file names") {
    const auto corpus = load_corpus(GFPKIT_CORPUS_DIR);
    REQUIRE(corpus.size() == 100);
    CHECK(corpus.front().id == "P1.1");
    CHECK(corpus.back().id == "I94");
    for (std::size_t i = 1; i < corpus.size(); ++i)
        CHECK(id_less(corpus[i - 1].id, corpus[i].id));
}

TEST_CASE("full corpus verdicts match the recorded empirical domains") {
    // Identities that are false as printed; each failing report must carry a
    // counterexample. Everything else passes or is not_applicable.
    const std::set<std::string> fails_everywhere = {"I36", "I42", "I77"};
    const std::set<std::string> fails_alpha2 = {"I62"};      // holds only for alpha = 1
    const std::set<std::string> fails_unless_d1 = {"I84"};   // holds only for d = 1
    const std::set<std::string> na_everywhere = {"I59"};     // radical never exact
    const std::set<std::string> na_alpha2 = {"I10", "I12"};  // alpha=1 guard

    const auto corpus = load_corpus(GFPKIT_CORPUS_DIR);
    const auto reports = verify_corpus(corpus, table_pairs(), 6, 2);
    REQUIRE(reports.size() == 600);

    for (const VerificationReport& r : reports) {
        INFO(r.id << " on " << r.pair);
        const FamilyPair* pair = find_pair(r.pair);
        REQUIRE(pair != nullptr);
        const bool alpha2 = pair->lucas->alpha == 2;
        const bool d_is_one = pair->lucas->d == Poly(1);

        Status want = Status::pass;
        if (fails_everywhere.count(r.id)) want = Status::fail;
        else if (fails_alpha2.count(r.id)) want = alpha2 ? Status::fail : Status::pass;
        else if (fails_unless_d1.count(r.id)) want = d_is_one ? Status::pass : Status::fail;
        else if (na_everywhere.count(r.id)) want = Status::not_applicable;
        else if (na_alpha2.count(r.id)) want = alpha2 ? Status::not_applicable : Status::pass;

        REQUIRE(r.status == want);
        if (want == Status::fail) {
            REQUIRE(r.counterexample.has_value());
        } else if (want == Status::pass) {
            REQUIRE(r.tuples_checked > 0);
            REQUIRE(!r.counterexample.has_value());
        }
    }
}
