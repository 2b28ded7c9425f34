// Acceptance runner: one pass/fail line per criterion, nonzero exit on failure.

#include <algorithm>
#include <iostream>

#include "grassclique/acceptance.hpp"

int main() {
    const auto results = grassclique::run_acceptance(std::cout);
    const bool all = std::all_of(results.begin(), results.end(),
                                 [](const grassclique::CriterionResult& r) { return r.passed; });
    std::cout << (all ? "all criteria passed" : "FAILURES present") << std::endl;
    return all ? 0 : 1;
}
