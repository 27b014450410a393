#include "copic/flow.hpp"

#include <algorithm>
#include <optional>

#include "copic/errors.hpp"

namespace copic {

namespace {

struct ResidualArc {
    int head;
    long residual;
    Cost cost;
    int partner; // index of the reverse residual arc
};

} // namespace

FlowResult min_cost_flow(const FlowNetwork& net) {
    const int n = net.num_vertices;
    if (static_cast<int>(net.supplies.size()) != n) throw DomainError("supply length mismatch");
    long balance = 0;
    for (long b : net.supplies) balance += b;
    if (balance != 0) throw DomainError("supplies do not balance to zero");
    for (const auto& arc : net.arcs) {
        if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n)
            throw DomainError("arc endpoint out of range");
        if (arc.capacity < 0) throw DomainError("negative capacity");
        if (arc.cost.is_infinite()) throw DomainError("min_cost_flow requires finite arc costs");
    }

    // Residual graph: forward arc 2k, reverse arc 2k+1.
    std::vector<ResidualArc> res;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    res.reserve(net.arcs.size() * 2);
    for (const auto& arc : net.arcs) {
        int fwd = static_cast<int>(res.size());
        res.push_back({arc.head, arc.capacity, arc.cost, fwd + 1});
        res.push_back({arc.tail, 0, -arc.cost, fwd});
        out[static_cast<std::size_t>(arc.tail)].push_back(fwd);
        out[static_cast<std::size_t>(arc.head)].push_back(fwd + 1);
    }

    // Initial potentials by Bellman-Ford from a virtual source connected to
    // every vertex at cost zero; detects negative cycles.
    std::vector<Cost> potential(static_cast<std::size_t>(n), Cost(0));
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int a = 0; a < static_cast<int>(res.size()); a += 2) {
            if (res[static_cast<std::size_t>(a)].residual <= 0) continue;
            int u = res[static_cast<std::size_t>(a + 1)].head; // tail of forward arc
            int v = res[static_cast<std::size_t>(a)].head;
            Cost cand = potential[static_cast<std::size_t>(u)] + res[static_cast<std::size_t>(a)].cost;
            if (cand < potential[static_cast<std::size_t>(v)]) {
                potential[static_cast<std::size_t>(v)] = cand;
                changed = true;
                if (round == n - 1)
                    throw NegativeCycleError("negative-cost cycle in flow network", {a / 2});
            }
        }
        if (!changed) break;
    }

    std::vector<long> excess(net.supplies.begin(), net.supplies.end());

    auto find_excess = [&]() {
        for (int v = 0; v < n; ++v)
            if (excess[static_cast<std::size_t>(v)] > 0) return v;
        return -1;
    };

    Cost total_cost(0);
    for (int source = find_excess(); source != -1; source = find_excess()) {
        // Dijkstra over reduced costs, deterministic tie order by vertex id.
        std::vector<std::optional<Cost>> dist(static_cast<std::size_t>(n));
        std::vector<int> parent_arc(static_cast<std::size_t>(n), -1);
        std::vector<bool> done(static_cast<std::size_t>(n), false);
        dist[static_cast<std::size_t>(source)] = Cost(0);
        for (;;) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (done[static_cast<std::size_t>(v)] || !dist[static_cast<std::size_t>(v)]) continue;
                if (best == -1 || *dist[static_cast<std::size_t>(v)] < *dist[static_cast<std::size_t>(best)]) best = v;
            }
            if (best == -1) break;
            done[static_cast<std::size_t>(best)] = true;
            for (int a : out[static_cast<std::size_t>(best)]) {
                const ResidualArc& ra = res[static_cast<std::size_t>(a)];
                if (ra.residual <= 0) continue;
                Cost reduced = ra.cost + potential[static_cast<std::size_t>(best)] -
                               potential[static_cast<std::size_t>(ra.head)];
                Cost cand = *dist[static_cast<std::size_t>(best)] + reduced;
                auto& dv = dist[static_cast<std::size_t>(ra.head)];
                if (!dv || cand < *dv) {
                    dv = cand;
                    parent_arc[static_cast<std::size_t>(ra.head)] = a;
                }
            }
        }

        // Closest reachable deficit vertex.
        int sink = -1;
        for (int v = 0; v < n; ++v) {
            if (excess[static_cast<std::size_t>(v)] >= 0 || !dist[static_cast<std::size_t>(v)]) continue;
            if (sink == -1 || *dist[static_cast<std::size_t>(v)] < *dist[static_cast<std::size_t>(sink)]) sink = v;
        }
        if (sink == -1) throw NoSolutionError("flow infeasible: supplies cannot be met");

        for (int v = 0; v < n; ++v)
            if (dist[static_cast<std::size_t>(v)])
                potential[static_cast<std::size_t>(v)] += *dist[static_cast<std::size_t>(v)];

        long push = std::min(excess[static_cast<std::size_t>(source)], -excess[static_cast<std::size_t>(sink)]);
        for (int v = sink; v != source;) {
            int a = parent_arc[static_cast<std::size_t>(v)];
            push = std::min(push, res[static_cast<std::size_t>(a)].residual);
            v = res[static_cast<std::size_t>(res[static_cast<std::size_t>(a)].partner)].head;
        }
        for (int v = sink; v != source;) {
            int a = parent_arc[static_cast<std::size_t>(v)];
            res[static_cast<std::size_t>(a)].residual -= push;
            res[static_cast<std::size_t>(res[static_cast<std::size_t>(a)].partner)].residual += push;
            v = res[static_cast<std::size_t>(res[static_cast<std::size_t>(a)].partner)].head;
        }
        excess[static_cast<std::size_t>(source)] -= push;
        excess[static_cast<std::size_t>(sink)] += push;
    }

    FlowResult result;
    result.flow.assign(net.arcs.size(), 0);
    for (std::size_t k = 0; k < net.arcs.size(); ++k) {
        long f = net.arcs[k].capacity - res[2 * k].residual;
        result.flow[k] = f;
        if (f != 0) total_cost += net.arcs[k].cost * Cost(f);
    }
    result.cost = total_cost;
    return result;
}

} // namespace copic
