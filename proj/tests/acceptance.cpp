// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exits nonzero if
// any criterion fails.

#include <iostream>

#include "sgc/verify.hpp"

int main() {
    const auto results = sgc::run_verification_suite();
    const int failures = sgc::print_report(results, std::cout);
    return failures == 0 ? 0 : 1;
}
