#pragma once

#include <vector>

#include "nfk/report.hpp"

namespace nfk {

struct VerifyOptions {
    Int max_order = 3000;             // pair scan bound on q^n - 1
    bool slow_suite = false;          // adds the exceptional product groups
    Int group_table_bound = 3000;     // cap for explicit tables / brute force
    Int nearfield_table_bound = 729;  // cap for nearfield construction (on q^n)
};

struct VerifyOutcome {
    Report report;
    int checks = 0;
    int failures = 0;                 // unexpected mismatches
    int expected_discrepancies = 0;   // documented, reported, non-fatal

    int exit_code() const { return failures ? 1 : 0; }
};

/// Runs every cross-check (formula vs enumeration vs brute force, axiom
/// scans, presentation matches, NVS oracles) over all Dickson pairs with
/// q^n - 1 <= max_order, plus the field and exceptional suites. The
/// report is byte-identical across runs for fixed options.
VerifyOutcome run_verify(const VerifyOptions& opt);

/// Every library operation the verifier must exercise; the run's final
/// coverage check fails if one was missed.
const std::vector<std::string>& verifiable_operations();

}  // namespace nfk
