#pragma once

#include <string>
#include <vector>

namespace lcslab::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail; // failure description, empty on success
};

// Runs the full regression manifest. degmax_cap > 0 lowers the scan ceilings
// for a faster smoke run; 0 runs the manifest at its reference bounds.
std::vector<CheckResult> run_paper_suite(int degmax_cap = 0);

} // namespace lcslab::verify
