#pragma once

#include <string>
#include <vector>

namespace eisenworks {

// One row of the self-test manifest. detail carries a short account of
// what was measured on success, or the first failure encountered.
struct AcceptanceItem {
    int number = 0;
    std::string label;
    bool passed = false;
    std::string detail;
};

struct AcceptanceOptions {
    // Truncation order for the expansion-level checks. 12 is the contract
    // value; raising it only makes the exact checks stricter.
    long order = 12;
    // Dirichlet cutoff for the numeric completed-L comparisons, at least
    // 100000 so the 1e-6 tolerances are comfortably inside the tail bound.
    long lseries_terms = 100000;
};

// Runs the fifteen acceptance checks in order and reports one item each.
// Exceptions raised inside a check are recorded as that item's failure,
// so the returned vector always has all fifteen entries. Throws only for
// options below the documented minimums.
std::vector<AcceptanceItem> run_acceptance(const AcceptanceOptions& opt = {});

} // namespace eisenworks
