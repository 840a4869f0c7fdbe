/**
 * @file test_cli.cpp
 * @brief End-to-end tests of the qtetra command-line tool: subcommand
 *        output, exit codes, and the JSON report round-trip.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"

#include "qt/quiver.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Runs the CLI binary with the given arguments, capturing stdout.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QTETRA_PATH) + " " + args;
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("quiver mutate prints the mutated seed as JSON") {
    RunResult r = run_cli("quiver mutate --seed J121 --at 4");
    CHECK(r.exit_code == 0);
    json got = json::parse(r.out);
    json want = json::parse(qt::seed_to_json(qt::builtin_quiver(qt::QuiverName::J212)));
    CHECK(got == want);
}

TEST_CASE("tropical signs reports the mutation sign sequence") {
    RunResult r = run_cli("tropical signs --seed J1212 --seq 2,5,2");
    CHECK(r.exit_code == 0);
    json got = json::parse(r.out);
    CHECK(got["signs"] == json::array({1, 1, -1}));
    CHECK(got.contains("finalC"));
    CHECK(got.contains("finalB2"));
}

TEST_CASE("passing identity check exits 0") {
    RunResult r = run_cli("identity pentagon --order 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("quiver mutate --seed J121").exit_code == 2);  // missing --at
    CHECK(run_cli("identity no-such-identity").exit_code == 2);
}

TEST_CASE("JSON report round-trips and carries schema 1") {
    const char* path = "test_cli_report.json";
    RunResult r = run_cli(std::string("identity pentagon --order 4 --json ") + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    json doc = json::parse(buf.str());
    CHECK(doc["schema"] == 1);
    CHECK(doc["totals"]["fail"] == 0);
    CHECK(doc["totals"]["pass"].get<int>() >= 1);
    CHECK(doc["cases"].is_array());
    for (const auto& c : doc["cases"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("inputs"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("got"));
        CHECK(c.contains("pass"));
    }
    // parse-then-serialize is the identity on the document
    CHECK(json::parse(doc.dump()) == doc);
    std::remove(path);
}

TEST_CASE("rep element agrees with the closed form at the origin") {
    RunResult r = run_cli("rep element --op r --basis u --in 0,0,0 --out 0,0,0 --n 0,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 1) == "1");
}

TEST_CASE("ncqd check reports residual and exit status") {
    RunResult ok = run_cli("ncqd check --identity inversion --b 0.7 --tol 1e-8");
    CHECK(ok.exit_code == 0);
    RunResult bad = run_cli("ncqd check --identity inversion --b 0.7 --tol 1e-20");
    CHECK(bad.exit_code == 1);
}
