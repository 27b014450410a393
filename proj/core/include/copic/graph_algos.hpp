#ifndef COPIC_GRAPH_ALGOS_HPP
#define COPIC_GRAPH_ALGOS_HPP

#include <optional>
#include <vector>

#include "copic/cost.hpp"
#include "copic/graph.hpp"
#include "copic/index_set.hpp"

namespace copic {

/// Union-find over [n) with path compression.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    /// False when x and y were already connected.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent_[static_cast<std::size_t>(rx)] = ry;
        return true;
    }

private:
    std::vector<int> parent_;
};

struct ShortestPathResult {
    /// dist[v] is empty when v is unreachable.
    std::vector<std::optional<Cost>> dist;
    /// Edge index entering v on a shortest path tree, -1 at the source or
    /// when unreachable.
    std::vector<int> parent_edge;
};

/// Single-source shortest paths with exact arithmetic. Undirected edges are
/// relaxed in both directions. Throws NegativeCycleError (with a witness
/// cycle) when a negative-cost cycle is reachable from the source.
ShortestPathResult bellman_ford(const Graph& graph, int source, const CostVector& w);

/// Minimum-weight spanning forest base (maximal acyclic edge set) by ascending
/// (weight, edge index). Restricted to edges with allowed[e] == true when the
/// mask is non-empty.
IndexSet mst(const Graph& graph, const CostVector& w, const std::vector<bool>& allowed = {});

/// Rank of the graphic matroid of graph: num_vertices - number of connected
/// components (isolated vertices included).
int graphic_rank(const Graph& graph);

} // namespace copic

#endif // COPIC_GRAPH_ALGOS_HPP
