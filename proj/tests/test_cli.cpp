// Exercises the CLI binary end to end. Path to the binary comes in argv[1].

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

std::string cli_path;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = cli_path + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("inverse --json matches the paper example") {
    auto r = run_cli("inverse 12 --json");
    CHECK(r.exit_code == 0);
    auto rec = nlohmann::json::parse(r.out);
    CHECK(rec["command"] == "inverse");
    CHECK(rec["inputs"]["m"] == "12");
    CHECK(rec["provenance"] == "exact");
    std::vector<std::string> expected{"13", "21", "26", "28", "36", "42"};
    CHECK(rec["result"].get<std::vector<std::string>>() == expected);
}

TEST_CASE("json output is deterministic apart from elapsed_ms") {
    auto a = nlohmann::json::parse(run_cli("inverse 48 --json").out);
    auto b = nlohmann::json::parse(run_cli("inverse 48 --json").out);
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a == b);
}

TEST_CASE("count and oracle") {
    CHECK(run_cli("count 2").out.find("3") != std::string::npos);
    auto r = nlohmann::json::parse(run_cli("oracle 16 --json").out);
    CHECK(r["provenance"] == "oracle");
    CHECK(r["result"].size() == 6);
}

TEST_CASE("pow2 subcommands") {
    auto r = nlohmann::json::parse(run_cli("pow2 count 33 --json").out);
    CHECK(r["result"] == "32");
    auto l = nlohmann::json::parse(run_cli("pow2 list 4 --json").out);
    CHECK(l["result"].size() == 6);
}

TEST_CASE("fermat list csv") {
    auto r = run_cli("fermat list --below 100000 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("index,value,status,witness") != std::string::npos);
    CHECK(r.out.find("4,65537,prime,") != std::string::npos);
}

TEST_CASE("construct and search") {
    auto c = nlohmann::json::parse(run_cli("construct 3 --json").out);
    CHECK(c["result"]["q"] == "48");
    CHECK(c["result"]["constructed"].get<int>() >= 5);
    auto s = nlohmann::json::parse(run_cli("search --multiplicity 3 --limit 100 --json").out);
    CHECK(s["result"] == "2");
    auto none = nlohmann::json::parse(run_cli("search --multiplicity 1 --limit 100 --json").out);
    CHECK(none["result"].is_null());
}

TEST_CASE("smooth table and report csv") {
    auto r = nlohmann::json::parse(run_cli("smooth 1 2 --json").out);
    CHECK(r["result"].size() == 4);
    auto csv = run_cli("smooth 2 1 --report --csv");
    CHECK(csv.out.find("k,n,exact,paper_estimate,lower_trunc") != std::string::npos);
    CHECK(csv.out.find("2,1,6,") != std::string::npos);
}

TEST_CASE("metric") {
    auto r = run_cli("metric 2 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.287682072") != std::string::npos);
    auto f = nlohmann::json::parse(run_cli("metric from-m 48 --json").out);
    CHECK(f["result"]["h"] == 16.0);
    CHECK(f["result"]["g"] == 3.0);
}

TEST_CASE("error exit codes") {
    CHECK(run_cli("inverse 0").exit_code == 3);          // domain error
    CHECK(run_cli("oracle 100000000").exit_code == 4);   // capacity
    CHECK(run_cli("pow2 count 64").exit_code == 4);      // unsettled without witnesses
    CHECK(run_cli("bogus").exit_code == 2);              // usage
}

TEST_CASE("witness file unlocks larger exponents") {
    const char* path = "cli_witness.txt";
    {
        FILE* f = fopen(path, "w");
        fputs("6 274177\n", f);
        fclose(f);
    }
    auto r = nlohmann::json::parse(
        run_cli(std::string("pow2 count 64 --witness-file ") + path + " --json").out);
    CHECK(r["result"] == "32");
    std::remove(path);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-cli-binary>\n");
        return 1;
    }
    cli_path = argv[1];
    doctest::Context ctx;
    return ctx.run();
}
