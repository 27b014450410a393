#ifndef COPIC_REDUCTIONS_HPP
#define COPIC_REDUCTIONS_HPP

#include <functional>

#include "copic/instance.hpp"

namespace copic {

/// Minimum-cost directed cut of prescribed cardinality k in the complete
/// bipartite digraph with left part [m] and right part [n]; arc (i, j) costs
/// q[i][j].
struct KCardCutInstance {
    int m = 0;
    int n = 0;
    CostMatrix q;
    long k = 0;
};

/// A cut S (left vertices in s_left, right vertices in s_right) whose
/// outgoing arc set has the prescribed cardinality.
struct KCardCutResult {
    IndexSet s_left;
    IndexSet s_right;
    Cost cost;
    int k1 = 0; // |s_left|
    int k2 = 0; // arcs leave toward the k2 right vertices outside s_right
};

using CopicSolver = std::function<Solution(const Instance&)>;

/**
 * Solves the k-card directed min-cut by sweeping divisor pairs k1 * k2 = k
 * and solving a uniform(k1) x uniform(k2) instance with Q and zero linear
 * costs for each; the best (S1, S2) maps to the cut S = S1 union
 * ([n] \ S2), whose outgoing arcs are exactly S1 x S2.
 *
 * Throws NoSolutionError when no divisor pair fits (k1 <= m, k2 <= n).
 */
KCardCutResult solve_kcard_cut_via_copic(const KCardCutInstance& inst, const CopicSolver& solver);

} // namespace copic

#endif // COPIC_REDUCTIONS_HPP
