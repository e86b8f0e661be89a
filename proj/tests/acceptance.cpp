// Acceptance suite: replays every quoted example value, printing one line
// per check and a per-criterion rollup.  Exits nonzero when any check fails.

#include <cstdio>
#include <map>
#include <set>

#include "gwcycle/verify.hpp"

int main() {
    auto results = gw::run_verification();

    std::map<int, std::pair<int, int>> per_criterion; // criterion -> (pass, fail)
    for (const auto& r : results) {
        auto& [pass, fail] = per_criterion[r.criterion];
        (r.pass ? pass : fail) += 1;
        std::printf("[%s] criterion %d: %s", r.pass ? "PASS" : "FAIL", r.criterion,
                    r.name.c_str());
        if (!r.pass)
            std::printf(" (expected %s, got %s)", r.expected.c_str(), r.got.c_str());
        std::printf("\n");
    }

    std::printf("----\n");
    int failures = 0;
    for (const auto& [criterion, counts] : per_criterion) {
        std::printf("criterion %2d: %s (%d checks, %d failing)\n", criterion,
                    counts.second == 0 ? "PASS" : "FAIL", counts.first + counts.second,
                    counts.second);
        failures += counts.second;
    }

    // Meta-check: the registry must cover every acceptance criterion.
    for (int c = 1; c <= 10; ++c) {
        if (!per_criterion.count(c)) {
            std::printf("[FAIL] meta: criterion %d has no verify entry\n", c);
            ++failures;
        }
    }

    std::printf("%d of %zu checks failing\n", failures, results.size());
    return failures == 0 ? 0 : 1;
}
