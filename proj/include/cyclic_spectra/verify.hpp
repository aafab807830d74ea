#pragma once

// Seeded randomized identity suites shared by the CLI and the acceptance run.

#include <cstdint>
#include <string>
#include <vector>

namespace cyclic_spectra {

struct TrialFailure {
    std::size_t trial = 0;
    std::string input;  // JSON description of the generated inputs
    std::vector<std::string> mismatches;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<TrialFailure> failures;
    bool ok() const { return failures.empty(); }
};

struct SuiteConfig {
    std::size_t trials = 100;
    std::size_t max_vertices = 8;
    std::uint64_t seed = 2024;
    unsigned threads = 1;
};

/// h-additivity, schwenk-star, schwenk-comb, comb-trace, moment-cumulant, mixed-words.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& suite, const SuiteConfig& config);

/// CYCLIC_SPECTRA_THREADS if set and positive, otherwise hardware concurrency.
unsigned default_thread_count();

std::string suite_report_json(const SuiteReport& r);

}  // namespace cyclic_spectra
