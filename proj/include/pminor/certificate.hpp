#pragma once

#include <cstddef>
#include <vector>

#include "pminor/subset.hpp"

namespace pminor {

/// Ordered list of subsets witnessing clan-reversal equivalence: applying
/// Inv(steps[k], .) in order to the source matrix must pass through HL-clans
/// only and end at the target.
struct ReversalCertificate {
    std::size_t n = 0;
    std::vector<VertexSubset> steps;

    bool operator==(const ReversalCertificate&) const = default;
};

}  // namespace pminor
