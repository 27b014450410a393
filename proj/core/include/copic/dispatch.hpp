#ifndef COPIC_DISPATCH_HPP
#define COPIC_DISPATCH_HPP

#include <optional>
#include <string>

#include "copic/diagonal.hpp"
#include "copic/instance.hpp"

namespace copic {

/// DiagonalInstance view of a dense instance when m = n and every
/// off-diagonal interaction cost is zero.
std::optional<DiagonalInstance> try_diagonal_view(const Instance& instance);

struct DispatchResult {
    Solution solution;
    std::string solver;                  // name of the solver that ran
    std::vector<std::string> rejections; // "<name>: <reason>" per skipped solver
};

/// Names accepted by solve_named, in auto-dispatch precedence order.
const std::vector<std::string>& solver_names();

/// Runs one named solver; throws PreconditionError when its preconditions do
/// not hold for this instance.
Solution solve_named(const Instance& instance, const std::string& name,
                     std::size_t cap = kDefaultEnumerationCap);

/// Most specific applicable solver first: diagonal special cases, then
/// rank-1 / rank-r for an unconstrained side, then side enumeration, then
/// brute force. Rejected solvers are recorded with their reason.
DispatchResult solve_auto(const Instance& instance, std::size_t cap = kDefaultEnumerationCap);

} // namespace copic

#endif // COPIC_DISPATCH_HPP
