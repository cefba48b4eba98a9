// Acceptance runner: executes every acceptance suite at its pinned scale and
// time budget and prints one pass/fail line per criterion. The last criterion
// drives the CLI binary (passed as argv[1]) and demands byte-identical reruns
// under a fixed seed.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "shiftspec/suites.hpp"

#include "run_process.hpp"

namespace {

struct Criterion {
    int number;
    std::string suite;
    double target_seconds;
};

constexpr std::uint64_t kSeed = 2024;

bool run_library_criterion(const Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    shiftspec::SuiteResult r = shiftspec::run_suite(c.suite, kSeed);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool within_budget = elapsed < c.target_seconds;
    bool pass = r.passed && within_budget;
    std::printf("[%s] criterion %d: %s: %lld checks, %.2f s (target %.0f s)%s%s\n", pass ? "PASS" : "FAIL",
                c.number, c.suite.c_str(), r.checks, elapsed, c.target_seconds,
                r.passed ? "" : (": " + r.first_witness).c_str(),
                within_budget ? "" : ": over time budget");
    return pass;
}

bool run_cli_determinism(int number, const std::string& cli) {
    bool pass = true;
    std::string detail;
    for (const std::string& name : shiftspec::suite_names()) {
        std::string cmd = cli + " suite run --name " + name + " --seed " + std::to_string(kSeed);
        auto first = testutil::run_process(cmd);
        auto second = testutil::run_process(cmd);
        if (first.exit_code != 0 || second.exit_code != 0) {
            pass = false;
            detail = name + " exited nonzero";
            break;
        }
        if (first.output != second.output) {
            pass = false;
            detail = name + " rerun output differs";
            break;
        }
        if (first.output.empty()) {
            pass = false;
            detail = name + " produced no output";
            break;
        }
    }
    std::printf("[%s] criterion %d: cli-determinism: %zu suites rerun byte-identically%s%s\n",
                pass ? "PASS" : "FAIL", number, shiftspec::suite_names().size(), detail.empty() ? "" : ": ",
                detail.c_str());
    return pass;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria{
        {1, "spec-gap2", 10.0},         {2, "flat-gap", 60.0},      {3, "code-suite", 5.0},
        {4, "group-relations", 30.0},   {5, "induced-condensed", 30.0}, {6, "measure-surrogate", 20.0},
        {7, "oxtoby-structure", 10.0},
    };
    bool all = true;
    for (const Criterion& c : criteria) all = run_library_criterion(c) && all;

    if (argc > 1) {
        all = run_cli_determinism(8, argv[1]) && all;
    } else {
        std::printf("[FAIL] criterion 8: cli-determinism: CLI binary path not supplied\n");
        all = false;
    }

    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
