#ifndef COPIC_FIXEDRANK_HPP
#define COPIC_FIXEDRANK_HPP

#include <functional>

#include "copic/instance.hpp"

namespace copic {

/// Exact factored form Q = sum_p a_p b_p^T with linearly independent factor
/// vectors; r is the true rank.
struct RankFactorization {
    int r = 0;
    std::vector<CostVector> a_vectors; // r vectors of length m
    std::vector<CostVector> b_vectors; // r vectors of length n
};

/// Exact rank factorization by Gaussian elimination with full pivoting
/// (largest absolute value, ties by smallest row-major position). Q must be
/// finite; Q = 0 yields r = 0.
RankFactorization factorize(const CostMatrix& q);

/// True iff sum_p a_p b_p^T equals q entrywise.
bool reconstructs(const RankFactorization& fact, const CostMatrix& q);

/// Candidate first-side solutions (as index sets over [m]); the optimal x is
/// guaranteed to appear among them when family1 is unconstrained.
struct CandidateSet {
    std::vector<IndexSet> candidates;
};

inline constexpr std::size_t kDefaultCandidateCap = 1048576;

/// Rank-1 threshold sweep: breakpoints of mu = b^T y at -c_i/a_i, one
/// candidate per interval plus all tie variants at each breakpoint.
CandidateSet rank1_candidates(const CostVector& c, const RankFactorization& fact,
                              std::size_t cap = kDefaultCandidateCap);

/// Basis-structure enumeration: every r-subset B of [m] with nonsingular
/// A_B, nonbasics split by reduced-cost sign (zero reduced costs branch both
/// ways), basic variables taking all 0/1 values.
CandidateSet rankr_candidates(const CostVector& c, const RankFactorization& fact, int m,
                              std::size_t cap = kDefaultCandidateCap);

Solution solve_rank1_unconstrained_side(const Instance& instance, const RankFactorization& fact,
                                        std::size_t cap = kDefaultCandidateCap);

Solution solve_rankr_unconstrained_side(const Instance& instance, const RankFactorization& fact,
                                        std::size_t cap = kDefaultCandidateCap);

/**
 * A feasible solver for LCOP over family2 whose value is within the factor
 * alpha of optimal on nonnegative weight vectors.
 */
struct ApproximateLcopOracle {
    Cost alpha;
    std::function<LcopResult(const FamilySpec&, const CostVector&)> solve;
};

/**
 * As solve_rankr_unconstrained_side but completing each candidate with the
 * approximate oracle. The returned objective is within alpha of optimal
 * whenever the optimum is nonnegative. Induced weights are checked at
 * runtime; a negative one raises ContractViolationError.
 */
Solution solve_rankr_with_approximate_oracle(const Instance& instance, const RankFactorization& fact,
                                             const ApproximateLcopOracle& oracle,
                                             std::size_t cap = kDefaultCandidateCap);

} // namespace copic

#endif // COPIC_FIXEDRANK_HPP
