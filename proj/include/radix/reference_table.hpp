#pragma once

#include <string>
#include <vector>

#include "radix/numutil.hpp"
#include "radix/shape.hpp"

namespace radix {

// Worked splitting examples with independently known answers, used by the
// CLI "verify table" command and by the acceptance run.
struct ReferenceRow {
    long long n;
    BigInt a;
    long long p;
    std::string case_label;
    FactorShape shape;
};

const std::vector<ReferenceRow>& reference_table();

} // namespace radix
