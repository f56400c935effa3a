#pragma once

#include <cstdint>

#include "metaplectic/deciders.hpp"

namespace metaplectic {

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    long p = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    long checks = 0;
    double elapsed_ms = 0.0;
    std::vector<SuiteFailure> failures;

    bool passed() const { return failures.empty(); }
};

std::vector<std::string> suite_names();

// Run one registered invariant suite at a prime; deterministic under (seed, samples).
SuiteReport run_suite(const std::string& name, long p, std::uint64_t seed, long samples);

struct AggregateReport {
    std::vector<SuiteReport> reports;
    long total_checks = 0;
    long total_failures = 0;
    double elapsed_ms = 0.0;

    bool passed() const { return total_failures == 0; }
};

// Every suite for each odd prime in ps; p = 2 runs the hilbert and structure suites only.
AggregateReport run_all(const std::vector<long>& ps, std::uint64_t seed, long samples);

std::string report_json(const SuiteReport& r);
std::string report_json(const AggregateReport& r);
std::string report_text(const SuiteReport& r);

} // namespace metaplectic
