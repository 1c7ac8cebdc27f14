#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qgalois {

struct CheckResult {
    std::string name;
    bool pass = true;
    long instances = 0;   // how many window instances were evaluated
    long failures = 0;
    // first failing instance, element literals
    std::string witness, lhs, rhs;
};

struct Report {
    // config echo
    int n = 0, m = 0, lambda_exp = 1, window = 0;
    std::string mu;
    std::vector<std::string> suites;

    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> table;
    long elapsed_ms = 0;

    int failure_count() const;
    // deterministic: no timing in the JSON form
    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace qgalois
