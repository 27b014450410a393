#include "copic/graph_algos.hpp"

#include <algorithm>
#include <numeric>

#include "copic/errors.hpp"

namespace copic {

namespace {

struct Arc {
    int tail, head, edge;
};

std::vector<Arc> expand_arcs(const Graph& graph) {
    std::vector<Arc> arcs;
    for (int e = 0; e < graph.num_edges(); ++e) {
        auto [u, v] = graph.edges[static_cast<std::size_t>(e)];
        arcs.push_back({u, v, e});
        if (!graph.directed) arcs.push_back({v, u, e});
    }
    return arcs;
}

} // namespace

ShortestPathResult bellman_ford(const Graph& graph, int source, const CostVector& w) {
    graph.check();
    if (source < 0 || source >= graph.num_vertices) throw DomainError("source out of range");
    if (static_cast<int>(w.size()) != graph.num_edges()) throw DomainError("weight length mismatch");
    for (const Cost& x : w)
        if (x.is_infinite()) throw DomainError("bellman_ford requires finite weights");
    if (!graph.directed)
        for (const Cost& x : w)
            if (x.is_negative())
                throw NegativeCycleError("negative undirected edge is a negative cycle", {});

    const auto arcs = expand_arcs(graph);
    const std::size_t n = static_cast<std::size_t>(graph.num_vertices);
    ShortestPathResult result;
    result.dist.assign(n, std::nullopt);
    result.parent_edge.assign(n, -1);
    std::vector<int> parent_vertex(n, -1);
    result.dist[static_cast<std::size_t>(source)] = Cost(0);

    // n full phases; a relaxation in the final phase proves a reachable
    // negative cycle, and walking n parent steps from the relaxed vertex
    // lands inside it.
    int last_relaxed = -1;
    for (int round = 0; round < graph.num_vertices; ++round) {
        last_relaxed = -1;
        for (const Arc& a : arcs) {
            const auto& du = result.dist[static_cast<std::size_t>(a.tail)];
            if (!du) continue;
            Cost cand = *du + w[static_cast<std::size_t>(a.edge)];
            auto& dv = result.dist[static_cast<std::size_t>(a.head)];
            if (!dv || cand < *dv) {
                dv = cand;
                result.parent_edge[static_cast<std::size_t>(a.head)] = a.edge;
                parent_vertex[static_cast<std::size_t>(a.head)] = a.tail;
                last_relaxed = a.head;
            }
        }
        if (last_relaxed == -1) break;
    }
    if (last_relaxed != -1) {
        int x = last_relaxed;
        for (int i = 0; i < graph.num_vertices && x != -1; ++i)
            x = parent_vertex[static_cast<std::size_t>(x)];
        std::vector<int> cycle;
        if (x != -1) {
            int u = x;
            do {
                cycle.push_back(result.parent_edge[static_cast<std::size_t>(u)]);
                u = parent_vertex[static_cast<std::size_t>(u)];
            } while (u != x && u != -1);
            std::reverse(cycle.begin(), cycle.end());
        }
        throw NegativeCycleError("negative-cost cycle reachable from source", cycle);
    }
    return result;
}

IndexSet mst(const Graph& graph, const CostVector& w, const std::vector<bool>& allowed) {
    graph.check();
    if (graph.directed) throw DomainError("mst requires an undirected graph");
    if (static_cast<int>(w.size()) != graph.num_edges()) throw DomainError("weight length mismatch");

    std::vector<int> order(static_cast<std::size_t>(graph.num_edges()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
    });

    DisjointSets dsu(graph.num_vertices);
    IndexSet tree;
    for (int e : order) {
        if (!allowed.empty() && !allowed[static_cast<std::size_t>(e)]) continue;
        auto [u, v] = graph.edges[static_cast<std::size_t>(e)];
        if (dsu.unite(u, v)) tree.push_back(e);
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

int graphic_rank(const Graph& graph) {
    DisjointSets dsu(graph.num_vertices);
    int merges = 0;
    for (const auto& [u, v] : graph.edges)
        if (dsu.unite(u, v)) ++merges;
    return merges;
}

} // namespace copic
