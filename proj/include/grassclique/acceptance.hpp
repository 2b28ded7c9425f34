#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grassclique {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the whole verification suite (fields, counting, cardinality formulas,
/// theorem-vs-oracle censuses, worked-example goldens, W-laws, derived size
/// law, connectivity smoke, determinism) and prints one pass/fail line per
/// criterion to `out`. Returns the per-criterion results.
std::vector<CriterionResult> run_acceptance(std::ostream& out, int jobs = 0);

/// The worked-example fixtures compiled into the binary; identical in content
/// to fixtures/worked_examples.json.
const char* embedded_fixtures_json();

}  // namespace grassclique
