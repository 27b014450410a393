#ifndef COPIC_BRUTEFORCE_HPP
#define COPIC_BRUTEFORCE_HPP

#include "copic/certificates.hpp"
#include "copic/instance.hpp"

namespace copic {

inline constexpr std::size_t kDefaultPairCap = 10000000;

/**
 * Ground-truth solver: enumerates every feasible pair and keeps the best,
 * ties broken by graded lexicographic (s1, s2). Deliberately naive.
 *
 * Throws EnumerationCapError when |F1| * |F2| exceeds pair_cap and
 * NoSolutionError when either family is empty.
 */
Solution solve_bruteforce(const Instance& instance, std::size_t pair_cap = kDefaultPairCap);

/**
 * Enumerates the chosen side (1 or 2) and completes the other side with its
 * linear-cost oracle over the induced weights h[j] = sum_{i in S1} q[i][j] +
 * d[j]. Elements whose induced weight is +inf are removed from the completion
 * ground set; candidates with no feasible completion are skipped.
 */
Solution solve_by_side_enumeration(const Instance& instance, int side,
                                   std::size_t cap = kDefaultEnumerationCap);

/**
 * Enumeration-based linearizability test: decides whether vectors (a, b)
 * reproduce every feasible pair's interaction sum, by exact elimination.
 * See LinearizabilityCertificate for the witness format.
 */
LinearizabilityCertificate linearizable_bruteforce(const Instance& instance,
                                                   std::size_t cap = kDefaultEnumerationCap);

} // namespace copic

#endif // COPIC_BRUTEFORCE_HPP
