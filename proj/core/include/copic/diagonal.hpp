#ifndef COPIC_DIAGONAL_HPP
#define COPIC_DIAGONAL_HPP

#include "copic/instance.hpp"

namespace copic {

/**
 * An instance whose interaction costs live on the diagonal of a shared
 * ground set:
 *
 *   f(S1, S2) = sum_{i in S1 ^ S2} a[i] + sum_{i in S1} c[i]
 *             + sum_{j in S2} d[j].
 *
 * a may contain +inf (forbidding co-selection); c and d are finite.
 */
struct DiagonalInstance {
    int n = 0;
    DiagonalCosts a;
    CostVector c;
    CostVector d;
    FamilySpec family1 = FamilySpec::unconstrained(0);
    FamilySpec family2 = FamilySpec::unconstrained(0);
};

/// Dense equivalent instance (expands diag(a)).
Instance to_instance(const DiagonalInstance& inst);

/// Both families unconstrained: independent per-element choice among
/// {skip: 0, S1 only: c, S2 only: d, both: a+c+d}, ties to the earliest
/// state. O(n).
Solution solve_diag_unconstrained_pair(const DiagonalInstance& inst);

/// One family unconstrained (either side): reduces to one linear-cost
/// optimization over the other family with costs
/// f[i] = min{c[i]+d[i]+a[i], c[i]} - min{d[i], 0}.
Solution solve_diag_one_side_unconstrained(const DiagonalInstance& inst);

/// Uniform x uniform: dynamic program over elements with state
/// (chosen into S1, chosen into S2); O(n k1 k2).
Solution solve_diag_uniform_pair(const DiagonalInstance& inst);

/// Uniform(k) x s-t-path with a >= 0, d >= 0, c = 0: dynamic program over
/// (vertex, path length, designated overlap count), then S1 is completed
/// with zero-impact off-path elements.
Solution solve_diag_uniform_path(const DiagonalInstance& inst);

/// Matroid x matroid with a >= 0 and c = d: element-doubling reduction to
/// the minimum-weight disjoint base problem on the matroid union.
Solution solve_diag_matroid_pair(const DiagonalInstance& inst);

/// s-t-path x s-t-path with common terminals, a >= 0 and c = d >= 0:
/// two-unit min-cost flow over per-edge cheap/expensive copies; +inf a
/// omits the expensive copy, enforcing edge-disjointness.
Solution solve_diag_common_paths(const DiagonalInstance& inst);

} // namespace copic

#endif // COPIC_DIAGONAL_HPP
