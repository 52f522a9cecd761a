#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("qsslocc_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

CliResult run(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(QSSLOCC_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int rc = std::system(cmd.c_str());
    return {WEXITSTATUS(rc), slurp(out), slurp(err)};
}

fs::path rep3_file() {
    static fs::path p =
        write_file("rep3.json", R"({"field": {"p": 2, "m": 1}, "generator": [[1,1,1]]})");
    return p;
}

fs::path parity2_file() {
    static fs::path p = write_file(
        "parity2.json", R"({"field": {"p": 2, "m": 1}, "generator": [[1,0,1],[0,1,1]]})");
    return p;
}

}  // namespace

TEST_CASE("analyze: text report") {
    CliResult r = run("analyze --code " + rep3_file().string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("d=3") != std::string::npos);
    CHECK(r.out.find("MDS: true") != std::string::npos);

    fs::path ident = write_file("ident2.json",
                                R"({"field": {"p": 2, "m": 1}, "generator": [[1,0],[0,1]]})");
    CliResult ri = run("analyze --code " + ident.string());
    CHECK(ri.exit_code == 0);
    CHECK(ri.out.find("d=1") != std::string::npos);
    CHECK(ri.out.find("MDS: true") != std::string::npos);
}

TEST_CASE("analyze: json report") {
    CliResult r = run("analyze --format json --code " + rep3_file().string());
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["k"] == 1);
    CHECK(j["q"] == 2);
    CHECK(j["d_enumeration"] == 3);
    CHECK(j["d_rank"] == 3);
    CHECK(j["mds"] == true);
    CHECK(j["recovery_threshold"] == 1);
}

TEST_CASE("subsets: table and rank flags") {
    CliResult r = run("subsets --code " + parity2_file().string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("B={3} rank(G_B)=1 assisted=no") != std::string::npos);
    CHECK(r.out.find("B={1,2} rank(G_B)=2 assisted=yes") != std::string::npos);
    CHECK(r.out.find("consistent") != std::string::npos);
}

TEST_CASE("subsets: budget exceeded exits 3") {
    std::string row;
    for (int i = 0; i < 25; ++i) row += i ? ",1" : "1";
    fs::path wide =
        write_file("wide.json", R"({"field": {"p": 2, "m": 1}, "generator": [[)" + row + "]]}");
    CliResult r = run("subsets --code " + wide.string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("simulate: deterministic, reproducible output") {
    std::string args = "simulate --code " + rep3_file().string() +
                       " --subset-a 1,2 --seed 42 --trials 5";
    CliResult a = run(args);
    CliResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("trial 4") != std::string::npos);

    CliResult aj = run(args + " --format json");
    CliResult bj = run(args + " --format json");
    CHECK(aj.exit_code == 0);
    CHECK(aj.out == bj.out);
    auto j = nlohmann::json::parse(aj.out);
    CHECK(j["trials"].size() == 5);
    for (const auto& t : j["trials"]) CHECK(t["fidelity"] == 1.0);
}

TEST_CASE("simulate: --output writes the same bytes as stdout") {
    fs::path out = scratch_dir() / "transcripts.json";
    std::string args = "simulate --code " + rep3_file().string() +
                       " --subset-a 1,3 --seed 7 --trials 2 --format json";
    CliResult direct = run(args);
    CliResult filed = run(args + " --output " + out.string());
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(out) == direct.out);
}

TEST_CASE("simulate: non-assisted subset fails with the rank report") {
    CliResult r = run("simulate --code " + parity2_file().string() + " --subset-a 1,2");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("rank(G_B)=1") != std::string::npos);
}

TEST_CASE("simulate: usage errors exit 2") {
    CHECK(run("simulate --code " + rep3_file().string()).exit_code == 2);  // no subset
    CHECK(run("simulate --code " + rep3_file().string() + " --subset-a 1,2 --trials 0")
              .exit_code == 2);
    CHECK(run("simulate --code " + rep3_file().string() + " --subset-a 0,1").exit_code == 2);
    CHECK(run("simulate --code " + rep3_file().string() + " --subset-a 1,2 --secret nope")
              .exit_code == 2);
    CHECK(run("simulate --code " + rep3_file().string() + " --subset-a 1,2 --secret basis:9")
              .exit_code == 2);
    CHECK(run("bogus --code " + rep3_file().string()).exit_code == 2);
    CHECK(run("analyze --code /no/such/file.json").exit_code == 2);
}

TEST_CASE("simulate: amplitude budget exits 3") {
    CliResult r = run("simulate --code " + rep3_file().string() +
                      " --subset-a 1,2 --budget-amps 4");
    CHECK(r.exit_code == 3);  // the encoded state needs 2^3 amplitudes
}

TEST_CASE("simulate: worker count cannot change the output") {
    std::string args = "simulate --code " + rep3_file().string() +
                       " --subset-a 1,2 --seed 9 --trials 8 --format json";
    CliResult serial = run(args);
    CliResult parallel = run(args + " --jobs 4");
    CHECK(serial.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("malformed code file reports position and exits 2") {
    fs::path bad = write_file("bad.json", "{\n  \"field\": oops\n}");
    CliResult r = run("analyze --code " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line") != std::string::npos);
    CHECK(r.err.find("column") != std::string::npos);
}

TEST_CASE("simulate: basis and file secrets") {
    CliResult r = run("simulate --code " + rep3_file().string() +
                      " --subset-a 1,2 --secret basis:0 --trials 2");
    CHECK(r.exit_code == 0);

    // unnormalized file secrets load with a warning
    fs::path amp = write_file("secret.json", "[[3.0, 0.0], [4.0, 0.0]]");
    CliResult rf = run("simulate --code " + rep3_file().string() +
                       " --subset-a 1,2 --secret file:" + amp.string() + " --trials 1");
    CHECK(rf.exit_code == 0);
    CHECK(rf.err.find("renormalizing") != std::string::npos);
}

TEST_CASE("verify: both directions, optional --jobs") {
    CliResult r = run("verify --code " + parity2_file().string() + " --trials 5 --seed 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("collision") != std::string::npos);
    CHECK(r.out.find("6/6 subsets consistent") != std::string::npos);

    CliResult rj = run("verify --code " + parity2_file().string() +
                       " --trials 5 --seed 11 --jobs 4");
    CHECK(rj.exit_code == 0);
    CHECK(rj.out == r.out);  // worker count cannot change the report

    CliResult one = run("verify --code " + parity2_file().string() +
                        " --subset-a 3 --trials 5");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("1/1 subsets consistent") != std::string::npos);
}
