#ifndef COPIC_FLOW_HPP
#define COPIC_FLOW_HPP

#include <string>
#include <vector>

#include "copic/cost.hpp"

namespace copic {

/// A min-cost-flow network with integral capacities and supplies. Supplies
/// must balance to zero. The label field lets callers map arcs back to
/// problem elements.
struct FlowNetwork {
    struct Arc {
        int tail = 0;
        int head = 0;
        long capacity = 0;
        Cost cost;
        int label = -1;
    };

    int num_vertices = 0;
    std::vector<Arc> arcs;
    std::vector<long> supplies; // length num_vertices, sum 0
};

struct FlowResult {
    std::vector<long> flow; // per arc, parallel to FlowNetwork::arcs
    Cost cost;
};

/**
 * Integral minimum-cost flow meeting all supplies, by successive shortest
 * augmenting paths with vertex potentials; initial potentials come from
 * Bellman-Ford so negative arc costs are admitted (negative cycles are not).
 *
 * Throws NoSolutionError when the supplies cannot be met and
 * NegativeCycleError when the arc costs contain a negative cycle.
 */
FlowResult min_cost_flow(const FlowNetwork& net);

} // namespace copic

#endif // COPIC_FLOW_HPP
