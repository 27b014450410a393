#ifndef COPIC_HUNGARIAN_HPP
#define COPIC_HUNGARIAN_HPP

#include <optional>
#include <vector>

#include "copic/cost.hpp"

namespace copic {

struct AssignmentResult {
    /// assignment[i] = column matched to row i.
    std::vector<int> assignment;
    Cost value;
};

/**
 * Minimum-cost perfect matching on a p x p cost matrix, exact arithmetic.
 * Entries must be finite. Among optima returns the lexicographically least
 * assignment vector.
 */
AssignmentResult hungarian(const CostMatrix& costs);

/// As hungarian, but +inf entries mark forbidden cells; nullopt when no
/// finite perfect matching exists.
std::optional<AssignmentResult> hungarian_allow_forbidden(const CostMatrix& costs);

} // namespace copic

#endif // COPIC_HUNGARIAN_HPP
