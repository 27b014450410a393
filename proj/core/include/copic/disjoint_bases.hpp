#ifndef COPIC_DISJOINT_BASES_HPP
#define COPIC_DISJOINT_BASES_HPP

#include <optional>

#include "copic/cost.hpp"
#include "copic/index_set.hpp"
#include "copic/matroid.hpp"

namespace copic {

/// Disjoint bases b1 of the first and b2 of the second matroid.
struct DisjointBasePair {
    IndexSet b1;
    IndexSet b2;
    Cost total_weight;
};

/**
 * Minimum-weight pair of disjoint bases (B1 of m1, B2 of m2) over a shared
 * ground set, or nullopt when no disjoint pair exists.
 *
 * Greedy by ascending (weight, index) over the matroid union: a set X
 * partitioned as X1 disjoint-union X2 with Xi independent in mi is grown one
 * element at a time; an element enters iff the exchange digraph admits an
 * augmenting path (matroid-partition augmentation, breadth-first so paths are
 * shortest). Feasible iff |X| reaches rank(m1) + rank(m2).
 */
std::optional<DisjointBasePair> min_weight_disjoint_bases(const MatroidOracle& m1,
                                                          const MatroidOracle& m2,
                                                          const CostVector& w);

namespace detail {
/// Greedy with an explicit consideration order (a permutation of the ground
/// set); exposed so tests can probe tie-order independence.
std::optional<DisjointBasePair> min_weight_disjoint_bases_ordered(const MatroidOracle& m1,
                                                                  const MatroidOracle& m2,
                                                                  const CostVector& w,
                                                                  const std::vector<int>& order);
} // namespace detail

} // namespace copic

#endif // COPIC_DISJOINT_BASES_HPP
