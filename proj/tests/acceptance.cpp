// Acceptance suite: runs every reproduction criterion exactly (integer
// arithmetic, zero tolerance) and prints one pass/fail line per criterion.

#include <cstdio>

#include "qtc/verify.hpp"

int main() {
    auto results = qtc::run_paper_checks();
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria pass"
                                 : "acceptance: FAILURES present");
    return all_pass ? 0 : 1;
}
