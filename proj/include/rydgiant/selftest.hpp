#pragma once

#include <string>
#include <vector>

namespace rydgiant {

struct SelftestCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Fast oracle and invariant checks (a few seconds). Never throws; an
/// exception inside a check is reported as a failure of that check.
std::vector<SelftestCheck> run_selftest();

}  // namespace rydgiant
