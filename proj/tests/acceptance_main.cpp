// Acceptance suite runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any requested criterion fails.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "cutstack/criteria.hpp"

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0) {
            for (int j = i + 1; j < argc; ++j) only.push_back(std::atoi(argv[j]));
            break;
        }
    }
    auto results = cutstack::run_acceptance(only, false);
    bool all = true;
    for (const auto& r : results) {
        std::printf("criterion %2d [%s] (%.2fs) %s: %s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.seconds, r.name.c_str(), r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
