#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Run the installed binary with the given arguments, capturing stdout.
// stderr is routed to /dev/null so diagnostics never pollute the capture.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("QMACD_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("stats subcommand emits the arm/leg statistics") {
    RunResult r = run_cli("stats --eta 1,0");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("eta") == nlohmann::json({1, 0}));
    CHECK(j.at("d").get<std::string>() == "1-qt");
    CHECK(j.at("dprime").get<std::string>() == "1-q");
    CHECK(j.at("e").get<std::string>() == "1-qt^2");
}

TEST_CASE("negative composition entries are a usage error") {
    RunResult r = run_cli("stats --eta 1,-1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("missing required option is a usage error") {
    RunResult r = run_cli("stats");
    CHECK(r.exit_code == 2);
}

TEST_CASE("epoly subcommand prints the polynomial") {
    RunResult r = run_cli("epoly --eta 0,1");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("display").get<std::string>() == "x2");

    RunResult c = run_cli("epoly --eta 0,0");
    CHECK(c.exit_code == 0);
    nlohmann::json jc = nlohmann::json::parse(c.out);
    CHECK(jc.at("display").get<std::string>() == "1");
}

TEST_CASE("epoly recursion and oracle agree through the CLI") {
    RunResult a = run_cli("epoly --eta 2,0,1");
    RunResult b = run_cli("epoly --eta 2,0,1 --oracle");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(nlohmann::json::parse(a.out).at("poly") ==
          nlohmann::json::parse(b.out).at("poly"));
}

TEST_CASE("kernel subcommand rejects a non-positive variable count") {
    RunResult r = run_cli("kernel --n 0 --degree 2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("kernel subcommand passes and is byte-deterministic") {
    RunResult a = run_cli("kernel --n 2 --degree 2 --check a,b,c,uplus");
    RunResult b = run_cli("kernel --n 2 --degree 2 --check a,b,c,uplus");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j.at("all_pass").get<bool>());
}

TEST_CASE("verify subcommand runs a suite and reports pass") {
    RunResult r = run_cli("verify --suite hecke --n 2 --degree 2");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("all_pass").get<bool>());
}
