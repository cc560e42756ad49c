// verify.hpp - end-to-end verification suite: exact zeros, parity, derived
// point values, analytic-vs-brute-force oracle equivalence, solver
// agreement, physicality, degeneracy handling and output determinism.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgc {

struct CriterionResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;  // measured numbers, bounds, notes
    double seconds = 0.0;
};

std::vector<CriterionResult> run_verification_suite();

// Prints one PASS/FAIL line per criterion; returns the number of failures.
int print_report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace sgc
