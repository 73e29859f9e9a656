#include "propcalc/report.hpp"

namespace propcalc {

void CheckReport::merge(const CheckReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
    checks_done += other.checks_done;
}

void CheckReport::add(std::string check, std::string where, std::string detail) {
    violations.push_back({std::move(check), std::move(where), std::move(detail)});
}

}  // namespace propcalc
