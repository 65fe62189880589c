// Runs the full verification suite and prints one line per check.
// Exit status is nonzero when any check fails its expectation or its
// time budget.

#include <cstdio>

#include <f4codes/verify.hpp>

int main() {
    using namespace f4codes::verify;
    int failures = 0;
    for (const auto& entry : all_checks()) {
        CheckResult r = run_entry(entry);
        std::puts(format_result_line(r).c_str());
        std::fflush(stdout);
        if (!r.ok()) ++failures;
    }
    if (failures) {
        std::printf("%d of %zu checks failed\n", failures, all_checks().size());
        return 1;
    }
    std::printf("all %zu checks passed\n", all_checks().size());
    return 0;
}
