#pragma once

#include <string>
#include <vector>

namespace mirrorext {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Run the full reproduction suite; one result per criterion.
std::vector<CriterionResult> run_acceptance(unsigned precision_bits = 128);

} // namespace mirrorext
