#pragma once

#include <string>
#include <vector>

namespace propcalc {

struct CheckViolation {
    std::string check;    // e.g. "vertical_associativity"
    std::string where;    // component / basis tuple
    std::string detail;
};

struct CheckReport {
    std::vector<CheckViolation> violations;
    std::vector<std::string> skipped;  // checks skipped due to truncation
    long long checks_done = 0;

    bool ok() const { return violations.empty(); }
    void merge(const CheckReport& other);
    void add(std::string check, std::string where, std::string detail = "");
};

}  // namespace propcalc
