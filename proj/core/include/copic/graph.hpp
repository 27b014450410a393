#ifndef COPIC_GRAPH_HPP
#define COPIC_GRAPH_HPP

#include <utility>
#include <vector>

#include "copic/errors.hpp"

namespace copic {

/// A multigraph with indexed edges. For directed graphs an edge (u, v) is the
/// arc u -> v; for undirected graphs it is usable in both directions.
struct Graph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    bool directed = false;

    int num_edges() const { return static_cast<int>(edges.size()); }

    void check() const {
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
                throw DomainError("edge endpoint out of range");
        }
    }

    /// Complete simple undirected graph on p vertices, edges in lexicographic
    /// (u, v) order with u < v.
    static Graph complete(int p) {
        Graph g;
        g.num_vertices = p;
        g.directed = false;
        for (int u = 0; u < p; ++u)
            for (int v = u + 1; v < p; ++v) g.edges.emplace_back(u, v);
        return g;
    }
};

} // namespace copic

#endif // COPIC_GRAPH_HPP
