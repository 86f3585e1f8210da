#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbpow::selftest {

struct CriterionResult {
    int id = 0;
    bool passed = false;
    std::string name;
    std::string detail;
};

// The full acceptance battery: exact identities checked against
// independent combinatorial oracles and randomized law suites with a
// fixed seed.  Every run is deterministic.
std::vector<CriterionResult> run_all();

// One pass/fail line per criterion; returns true when all pass.
bool run_and_report(std::ostream& os);

} // namespace hilbpow::selftest
