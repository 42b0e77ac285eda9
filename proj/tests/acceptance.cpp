// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. The checks live in the library so `ffrep selftest` runs the
// same code.
#include <cstdio>
#include <iostream>

#include "ffrep/selftest.hpp"

int main() {
    auto results = ffrep::selftest::run_acceptance();
    int failures = ffrep::selftest::report(results, std::cout);
    if (failures > 0) {
        std::cout << failures << " acceptance criteria FAILED\n";
        return 1;
    }
    std::cout << "all " << results.size() << " acceptance criteria passed\n";
    return 0;
}
