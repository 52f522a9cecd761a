#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qss/common.hpp"

namespace qss {

// Exit-code contract shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsageError = 2,
    kExitBudgetExceeded = 3,
};

// All runs are reproducible from the config alone; the default seed is fixed
// so tutorial output matches the documentation verbatim.
inline constexpr uint64_t kDefaultSeed = 42;

struct RunConfig {
    std::string command;                     // analyze | subsets | simulate | verify
    std::string code_file;
    std::vector<uint32_t> subset_a_1based;   // file/CLI formats number sites from 1
    std::string secret_spec = "random";      // random | basis:<idx> | file:<path>
    uint64_t seed = kDefaultSeed;
    uint32_t trials = 20;
    uint32_t jobs = 1;
    std::string output;                      // empty = stdout
    std::string format = "text";             // text | json
    Budgets budgets;
};

// Parses argv, dispatches, writes the report, and returns the exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace qss
