#ifndef COPIC_GENERATE_HPP
#define COPIC_GENERATE_HPP

#include <cstdint>
#include <string>

#include "copic/instance.hpp"

namespace copic {

/**
 * Seeded instance generation. Family grammar:
 *
 *   unconstrained            ground size from m/n
 *   uniform:K                ground size from m/n
 *   partition:S0.Q0,S1.Q1,.. consecutive blocks of sizes Si with quotas Qi
 *   graphic:complete:P       edges of K_P in lexicographic order
 *   graphic:random:V         random connected graph, edge count from m/n
 *   stpath:random:V          random graph with a guaranteed 0 -> V-1 path
 *   stpath:random:V:directed directed variant
 *   pm:P                     perfect matchings of K_{P,P}
 *
 * Structures: "random", "rank:R" (Q as a sum of R seeded outer products),
 * "diagonal" (emitted in diag form; requires matching ground sizes) and
 * "linearizable" (Q built from random constant-objective components).
 */
struct GenOptions {
    std::string family1;
    std::string family2;
    int m = -1; // required unless the family spec implies the size
    int n = -1;
    long cost_lo = -9;
    long cost_hi = 9;
    std::string structure = "random";
    std::uint64_t seed = 0;
};

/// Deterministic in all options; the result parses back to a valid instance.
std::string generate_instance_json(const GenOptions& options);

} // namespace copic

#endif // COPIC_GENERATE_HPP
