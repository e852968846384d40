#pragma once

#include <string>
#include <vector>

namespace mirrorext {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Pass/fail bundle returned by the verification operations.
struct Report {
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

} // namespace mirrorext
