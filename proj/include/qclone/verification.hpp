#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qclone::verify {

struct CheckResult {
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Check {
    std::string name;
    int criterion;      // 1..10 for the acceptance criteria, 0 for supplementary
    std::string suite;  // "paper", "oracle", "cg", "structural"
    std::function<CheckResult()> run;
};

// Every registered check in execution order.
const std::vector<Check>& all_checks();

// Budget for the oracle's flattened problem size (d^M x ancilla); oracle
// problems above it are skipped with a note. Default 512.
void set_oracle_max_dim(long long max_dim);

// Checks belonging to a named suite ("paper", "oracle", "cg", "structural",
// or "all").
std::vector<const Check*> suite_checks(const std::string& suite);

// Run a set of checks, printing one line per check; returns true when all
// pass.
bool run_and_report(const std::vector<const Check*>& checks);

}  // namespace qclone::verify
