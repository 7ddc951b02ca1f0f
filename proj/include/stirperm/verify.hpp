#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stirperm {

/// Inclusive range of orders, written "a..b" or "a".
struct NRange {
    int lo = 1;
    int hi = 5;
    static NRange parse(std::string_view text);  // throws ParseError
};

struct CheckResult {
    std::string suite;
    std::string id;
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string counterexample;
    double seconds = 0.0;
};

/// Registered suite names, ending with "all".
const std::vector<std::string>& suite_names();

/// Run one suite (or every suite for "all") over the orders in range.
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, NRange range, int jobs = 1);

}  // namespace stirperm
