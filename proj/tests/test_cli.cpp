// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// End-to-end checks of the command-line surface: output formats and the
// documented exit-code contract (0 ok, 1 verification failure, 2 usage or
// parse error, 3 invalid numeric argument).

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        std::string(GFPKIT_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string corpus = std::string("--corpus ") + GFPKIT_CORPUS_DIR;

}  // namespace

TEST_CASE("gen prints one polynomial per line") {
    const RunResult r = run("gen --family fibonacci --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n1\nx\nx^2 + 1\n");
    const RunResult lucas = run("gen --family lucas --n 1");
    CHECK(lucas.out == "2\nx\n");
}

TEST_CASE("gen error paths") {
    CHECK(run("gen --family nosuch --n 3").exit_code == 2);
    CHECK(run("gen --family fibonacci --n -1").exit_code == 3);
    CHECK(run("gen --family fibonacci").exit_code == 2);  // missing required option
}

TEST_CASE("eval numeric spot checks") {
    CHECK(run("eval --family fibonacci --n 5 --x 1").out == "5\n");
    CHECK(run("eval --family lucas --n 4 --x 1").out == "7\n");
    CHECK(run("eval --family pell --n 3 --x 1").out == "5\n");
    CHECK(run("eval --family pell --n 2 --x 1/2").out == "1\n");
    CHECK(run("eval --family fibonacci --n 5 --x 1/0").exit_code == 3);
}

TEST_CASE("families listing") {
    const RunResult text = run("families");
    CHECK(text.exit_code == 0);
    CHECK(std::count(text.out.begin(), text.out.end(), '\n') == 13);
    const RunResult json = run("families --format json");
    const auto parsed = nlohmann::json::parse(json.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 13);
    CHECK(parsed[0]["name"] == "fibonacci");
    CHECK(parsed[0]["delta"] == "x^2 + 4");
}

TEST_CASE("binet-check") {
    const RunResult r = run("binet-check --family all --max-n 24");
    CHECK(r.exit_code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);
    CHECK(run("binet-check --family chebyshev-first --max-n 0").exit_code == 0);
    CHECK(run("binet-check --family all --max-n -1").exit_code == 3);
}

TEST_CASE("verify single identity") {
    const RunResult r = run("verify " + corpus + " --identity I6 --families fibonacci");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("I6\tlucas/fibonacci\tpass") != std::string::npos);
    CHECK(r.out.find("summary: 1 passed, 0 failed, 0 not_applicable") != std::string::npos);

    const RunResult json =
        run("verify " + corpus + " --identity I6 --families fibonacci --format json");
    const auto parsed = nlohmann::json::parse(json.out);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["id"] == "I6");
    CHECK(parsed[0]["status"] == "pass");
    CHECK(parsed[0]["counterexample"].is_null());
    // field order is part of the format contract
    auto it = parsed[0].begin();
    (void)it;
    CHECK(json.out.find("\"id\"") < json.out.find("\"pair\""));
    CHECK(json.out.find("\"pair\"") < json.out.find("\"tuples_checked\""));
    CHECK(json.out.find("\"tuples_checked\"") < json.out.find("\"status\""));
}

TEST_CASE("verify error paths") {
    CHECK(run("verify " + corpus + " --identity NOPE").exit_code == 2);
    CHECK(run("verify " + corpus + " --families klein-bottle").exit_code == 2);
    CHECK(run("verify " + corpus + " --max-index 0").exit_code == 3);
    CHECK(run("verify " + corpus + " --jobs 0").exit_code == 3);
    CHECK(run("verify --corpus /nonexistent-dir").exit_code == 2);
}

TEST_CASE("verify reports a malformed corpus file with its position") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "gfpkit-badcorpus";
    fs::create_directories(dir);
    std::ofstream(dir / "manifest.json") << "{\"X1\": {\"proposition\": 3, \"part\": 1}}\n";
    std::ofstream(dir / "X1.gfpid") << "identity X1\nvars n\nlhs Gp[n\nrhs 0\n";
    const RunResult r = run("verify --corpus " + dir.string(), true);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("X1.gfpid") != std::string::npos);
    CHECK(r.out.find("3:") != std::string::npos);  // line of the unclosed bracket
    fs::remove_all(dir);
}

TEST_CASE("GFPKIT_CORPUS environment fallback") {
    const std::string cmd = std::string("GFPKIT_CORPUS=") + GFPKIT_CORPUS_DIR + " " +
                            GFPKIT_CLI_PATH +
                            " verify --identity I6 --families fibonacci 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(out.find("pass") != std::string::npos);
}
