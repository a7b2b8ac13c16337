// Acceptance runner: one line per criterion, nonzero exit on any failure.
// Usage: acceptance [--criterion N]

#include <cstdio>
#include <cstring>
#include <string>

#include "firefighter/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace firefighter::acceptance;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }

    bool all_pass = true;
    for (int id : criterion_ids()) {
        if (only && id != only) continue;
        CriterionResult r;
        try {
            r = run_criterion(id);
        } catch (const std::exception& e) {
            std::printf("[%2d] ERROR %s\n", id, e.what());
            all_pass = false;
            continue;
        }
        std::printf("[%2d] %s %s — %s (%.1fs)\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        if (!r.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
