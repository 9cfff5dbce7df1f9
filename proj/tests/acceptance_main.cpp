// Acceptance gate: runs the ten contractual verification batteries at their
// full scales and prints one PASS/FAIL line per criterion.  A criterion fails
// if its battery reports a defect or if it exceeds its time budget (budget 0
// means the time is reported but not enforced).  Exit status 0 iff all pass.
#include <cstdio>
#include <string>
#include <vector>

#include "prym/checks.hpp"

int main() {
    const std::vector<prym::checks::CheckResult> results = prym::checks::acceptance_suite();
    // budgets in seconds, aligned with acceptance_suite() order
    const std::vector<double> budgets{1.0, 0.1, 5.0, 10.0, 0.1, 10.0, 5.0, 0.0, 0.0, 0.0};
    if (results.size() != budgets.size()) {
        std::fprintf(stderr, "acceptance: expected %zu criteria, got %zu\n", budgets.size(),
                     results.size());
        return 1;
    }

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const prym::checks::CheckResult& r = results[i];
        const bool over_budget = budgets[i] > 0.0 && r.seconds > budgets[i];
        const bool ok = r.pass && !over_budget;
        if (!ok) ++failures;
        std::string note = r.detail;
        if (over_budget)
            note += (note.empty() ? "" : "; ") + std::string("over budget of ") +
                    std::to_string(budgets[i]) + "s";
        std::printf("[%2zu/%zu] %s  %-28s  %8.3fs  %s\n", i + 1, results.size(),
                    ok ? "PASS" : "FAIL", r.name.c_str(), r.seconds, note.c_str());
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria pass\n", results.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, results.size());
    return failures == 0 ? 0 : 1;
}
