#ifndef COPIC_INSTANCE_HPP
#define COPIC_INSTANCE_HPP

#include <string>
#include <vector>

#include "copic/cost.hpp"
#include "copic/family.hpp"
#include "copic/index_set.hpp"

namespace copic {

/**
 * A problem instance: pick S1 from family1 and S2 from family2 minimizing
 *
 *   f(S1, S2) = sum_{i in S1, j in S2} q[i][j] + sum_{i in S1} c[i]
 *             + sum_{j in S2} d[j].
 *
 * The sentinel +inf may appear only in q; it forbids co-selection of the
 * touching element pair.
 */
struct Instance {
    int m = 0;
    int n = 0;
    CostMatrix q; // m x n interaction costs
    CostVector c; // length m
    CostVector d; // length n
    FamilySpec family1 = FamilySpec::unconstrained(0);
    FamilySpec family2 = FamilySpec::unconstrained(0);
};

struct Solution {
    IndexSet s1;
    IndexSet s2;
    Cost objective;
};

/// Interaction costs concentrated on the diagonal of a shared ground set:
/// q[i][i] = a[i], q[i][j] = 0 for i != j.
struct DiagonalCosts {
    CostVector a;
};

/// Pure evaluator; family membership of s1, s2 is not required.
/// Throws DomainError on out-of-range indices.
Cost evaluate_objective(const Instance& instance, const IndexSet& s1, const IndexSet& s2);

/// Empty iff all Instance invariants hold. Each entry names one violation.
std::vector<std::string> validate_instance(const Instance& instance);

/// Dense n x n expansion of diagonal costs.
CostMatrix expand_diagonal(const DiagonalCosts& diag);

/// (objective, s1, s2) with graded lexicographic set order; the canonical
/// "better solution" predicate used by solvers to break ties.
bool solution_less(const Solution& a, const Solution& b);

/// Instance with the two sides swapped: transposed Q, c/d and families
/// exchanged. Solutions map back by swapping s1 and s2.
Instance transpose_instance(const Instance& instance);

} // namespace copic

#endif // COPIC_INSTANCE_HPP
