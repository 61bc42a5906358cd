#pragma once

#include "latcoh/finabgroup.hpp"
#include "latcoh/lattice.hpp"

#include <functional>
#include <string>
#include <vector>

namespace latcoh {

struct CheckResult {
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool pass() const;
    int failures() const;
};

struct VerifyConfig {
    int n_min = -6;
    int n_max = 6;
    int k_max = 3;
};

// Suites: prop6, pj, prop3, lemma, shift, duality, tube_mouths, free_vanish,
// and "all" (every suite, checks concatenated). BadParameters on other names.
SuiteReport verify(const std::string& suite, const VerifyConfig& cfg = {});

std::vector<std::string> verify_suite_names(); // the eight individual suites

// Compare a lattice's cohomology table (method both) against per-degree
// expectations. SizeLimit and method disagreements become failed checks.
std::vector<CheckResult> check_table(const Lattice& M, const std::string& label, int n_min,
                                     int n_max,
                                     const std::function<FinAbGroup(int)>& expected);

// JSON form of a report; checks in order, elapsed_ms optional so byte-level
// comparisons can exclude timing.
std::string report_to_json(const SuiteReport& r, bool include_elapsed = true);

} // namespace latcoh
