#include "copic/diagonal.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "copic/disjoint_bases.hpp"
#include "copic/errors.hpp"
#include "copic/flow.hpp"
#include "copic/matroid.hpp"

namespace copic {

namespace {

void require_diagonal(const DiagonalInstance& inst) {
    if (static_cast<int>(inst.a.a.size()) != inst.n || static_cast<int>(inst.c.size()) != inst.n ||
        static_cast<int>(inst.d.size()) != inst.n)
        throw DomainError("diagonal cost length mismatch");
    if (inst.family1.ground_size() != inst.n || inst.family2.ground_size() != inst.n)
        throw DomainError("family ground size mismatch");
    for (const Cost& v : inst.c)
        if (v.is_infinite()) throw DomainError("inf outside Q");
    for (const Cost& v : inst.d)
        if (v.is_infinite()) throw DomainError("inf outside Q");
}

Solution finish(const DiagonalInstance& inst, IndexSet s1, IndexSet s2) {
    Instance dense = to_instance(inst);
    s1 = canonical_set(std::move(s1));
    s2 = canonical_set(std::move(s2));
    Cost objective = evaluate_objective(dense, s1, s2);
    return Solution{std::move(s1), std::move(s2), objective};
}

bool graphs_equal(const Graph& a, const Graph& b) {
    return a.num_vertices == b.num_vertices && a.directed == b.directed && a.edges == b.edges;
}

} // namespace

Instance to_instance(const DiagonalInstance& inst) {
    require_diagonal(inst);
    Instance dense;
    dense.m = inst.n;
    dense.n = inst.n;
    dense.q = expand_diagonal(inst.a);
    dense.c = inst.c;
    dense.d = inst.d;
    dense.family1 = inst.family1;
    dense.family2 = inst.family2;
    return dense;
}

// ---------------------------------------------------------------------------
// Unconstrained x unconstrained

Solution solve_diag_unconstrained_pair(const DiagonalInstance& inst) {
    require_diagonal(inst);
    if (inst.family1.kind() != FamilySpec::Kind::Unconstrained ||
        inst.family2.kind() != FamilySpec::Kind::Unconstrained)
        throw PreconditionError("diag-unconstrained requires both families unconstrained");

    IndexSet s1, s2;
    for (int i = 0; i < inst.n; ++i) {
        const std::size_t e = static_cast<std::size_t>(i);
        const std::array<Cost, 4> state_cost = {Cost(0), inst.c[e], inst.d[e],
                                                inst.a.a[e] + inst.c[e] + inst.d[e]};
        int best = 0;
        for (int state = 1; state < 4; ++state)
            if (state_cost[static_cast<std::size_t>(state)] < state_cost[static_cast<std::size_t>(best)])
                best = state;
        if (best == 1 || best == 3) s1.push_back(i);
        if (best == 2 || best == 3) s2.push_back(i);
    }
    return finish(inst, std::move(s1), std::move(s2));
}

// ---------------------------------------------------------------------------
// One side unconstrained

Solution solve_diag_one_side_unconstrained(const DiagonalInstance& inst) {
    require_diagonal(inst);
    if (inst.family2.kind() != FamilySpec::Kind::Unconstrained) {
        if (inst.family1.kind() != FamilySpec::Kind::Unconstrained)
            throw PreconditionError("diag-one-side requires an unconstrained family");
        // Mirror so the unconstrained side is family2.
        DiagonalInstance flipped{inst.n, inst.a, inst.d, inst.c, inst.family2, inst.family1};
        Solution s = solve_diag_one_side_unconstrained(flipped);
        return Solution{s.s2, s.s1, s.objective};
    }

    CostVector f(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) {
        const std::size_t e = static_cast<std::size_t>(i);
        f[e] = min(inst.c[e] + inst.d[e] + inst.a.a[e], inst.c[e]) - min(inst.d[e], Cost(0));
    }
    LcopResult pick = lcop_solve(inst.family1, f);

    IndexSet s2;
    for (int i = 0; i < inst.n; ++i) {
        const std::size_t e = static_cast<std::size_t>(i);
        if (set_contains(pick.solution, i)) {
            if (inst.c[e] + inst.d[e] + inst.a.a[e] <= inst.c[e]) s2.push_back(i);
        } else if (inst.d[e].is_negative()) {
            s2.push_back(i);
        }
    }
    return finish(inst, pick.solution, std::move(s2));
}

// ---------------------------------------------------------------------------
// Uniform x uniform

Solution solve_diag_uniform_pair(const DiagonalInstance& inst) {
    require_diagonal(inst);
    const auto* u1 = inst.family1.as<UniformMatroid>();
    const auto* u2 = inst.family2.as<UniformMatroid>();
    if (!u1 || !u2) throw PreconditionError("diag-uniform requires uniform matroid families");
    const int k1 = u1->k, k2 = u2->k;

    // dp[j1][j2] over a growing element prefix; parents record the chosen
    // membership state per element.
    const auto idx = [&](int j1, int j2) {
        return static_cast<std::size_t>(j1) * static_cast<std::size_t>(k2 + 1) +
               static_cast<std::size_t>(j2);
    };
    std::vector<std::optional<Cost>> dp(static_cast<std::size_t>((k1 + 1) * (k2 + 1)));
    std::vector<std::vector<signed char>> parent(
        static_cast<std::size_t>(inst.n),
        std::vector<signed char>(static_cast<std::size_t>((k1 + 1) * (k2 + 1)), -1));
    dp[idx(0, 0)] = Cost(0);

    for (int i = 0; i < inst.n; ++i) {
        const std::size_t e = static_cast<std::size_t>(i);
        const std::array<Cost, 4> state_cost = {Cost(0), inst.c[e], inst.d[e],
                                                inst.a.a[e] + inst.c[e] + inst.d[e]};
        const std::array<int, 4> dj1 = {0, 1, 0, 1};
        const std::array<int, 4> dj2 = {0, 0, 1, 1};
        std::vector<std::optional<Cost>> next(dp.size());
        for (int j1 = 0; j1 <= k1; ++j1)
            for (int j2 = 0; j2 <= k2; ++j2) {
                const auto& cur = dp[idx(j1, j2)];
                if (!cur) continue;
                for (int state = 0; state < 4; ++state) {
                    int n1 = j1 + dj1[static_cast<std::size_t>(state)];
                    int n2 = j2 + dj2[static_cast<std::size_t>(state)];
                    if (n1 > k1 || n2 > k2) continue;
                    Cost cand = *cur + state_cost[static_cast<std::size_t>(state)];
                    auto& slot = next[idx(n1, n2)];
                    if (!slot || cand < *slot) {
                        slot = cand;
                        parent[e][idx(n1, n2)] = static_cast<signed char>(state);
                    }
                }
            }
        dp = std::move(next);
    }
    const auto& answer = dp[idx(k1, k2)];
    if (!answer) throw NoSolutionError("uniform quotas unreachable");

    IndexSet s1, s2;
    int j1 = k1, j2 = k2;
    for (int i = inst.n - 1; i >= 0; --i) {
        int state = parent[static_cast<std::size_t>(i)][idx(j1, j2)];
        if (state == 1 || state == 3) {
            s1.push_back(i);
            --j1;
        }
        if (state == 2 || state == 3) {
            s2.push_back(i);
            --j2;
        }
    }
    return finish(inst, std::move(s1), std::move(s2));
}

// ---------------------------------------------------------------------------
// Uniform x path

Solution solve_diag_uniform_path(const DiagonalInstance& inst) {
    require_diagonal(inst);
    const auto* u1 = inst.family1.as<UniformMatroid>();
    const auto* path = inst.family2.as<StPath>();
    if (!u1 || !path) throw PreconditionError("diag-uniform-path requires uniform x stpath families");
    for (const Cost& v : inst.a.a)
        if (v.is_negative()) throw PreconditionError("diag-uniform-path requires a >= 0");
    for (const Cost& v : inst.d)
        if (v.is_negative()) throw PreconditionError("diag-uniform-path requires d >= 0");
    for (const Cost& v : inst.c)
        if (!v.is_zero()) throw PreconditionError("diag-uniform-path requires c = 0");

    const Graph& g = path->graph;
    const int k = u1->k;
    const int n = inst.n;
    const int max_len = std::min(n, g.num_vertices - 1);

    struct Arc {
        int from, to, edge;
    };
    std::vector<Arc> arcs;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (u == v) continue;
        arcs.push_back({u, v, e});
        if (!g.directed) arcs.push_back({v, u, e});
    }

    // Walk DP; cycle removal below turns the best walk into a simple path
    // without raising the cost (a, d >= 0).
    const int V = g.num_vertices;
    const auto idx = [&](int v, int j) {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(k + 1) + static_cast<std::size_t>(j);
    };
    struct Parent {
        int vertex = -1, edge = -1;
        bool designated = false;
    };
    std::vector<std::vector<std::optional<Cost>>> dp(
        static_cast<std::size_t>(max_len + 1),
        std::vector<std::optional<Cost>>(static_cast<std::size_t>(V * (k + 1))));
    std::vector<std::vector<Parent>> parent(
        static_cast<std::size_t>(max_len + 1),
        std::vector<Parent>(static_cast<std::size_t>(V * (k + 1))));
    dp[0][idx(path->s, 0)] = Cost(0);

    for (int len = 0; len < max_len; ++len)
        for (const Arc& arc : arcs)
            for (int j = 0; j <= k; ++j) {
                const auto& cur = dp[static_cast<std::size_t>(len)][idx(arc.from, j)];
                if (!cur) continue;
                const std::size_t e = static_cast<std::size_t>(arc.edge);
                const Cost base = *cur + inst.d[e];
                auto relax = [&](int nj, const Cost& cand, bool designated) {
                    auto& slot = dp[static_cast<std::size_t>(len + 1)][idx(arc.to, nj)];
                    if (!slot || cand < *slot) {
                        slot = cand;
                        parent[static_cast<std::size_t>(len + 1)][idx(arc.to, nj)] =
                            Parent{arc.from, arc.edge, designated};
                    }
                };
                relax(j, base, false);
                if (j < k) relax(j + 1, base + inst.a.a[e], true);
            }

    std::optional<Cost> best;
    int best_len = -1, best_j = -1;
    for (int len = 1; len <= max_len; ++len)
        for (int j = 0; j <= std::min(k, len); ++j) {
            if (k - j > n - len) continue; // off-path completion must fit
            const auto& val = dp[static_cast<std::size_t>(len)][idx(path->t, j)];
            if (val && (!best || *val < *best)) {
                best = *val;
                best_len = len;
                best_j = j;
            }
        }
    if (!best) throw NoSolutionError("no s-t path");

    // Reconstruct the walk, then excise vertex revisits.
    std::vector<std::pair<int, bool>> walk; // (edge, designated), t-to-s order
    std::vector<int> vertices;              // aligned: vertex after each edge
    int v = path->t, j = best_j;
    for (int len = best_len; len > 0; --len) {
        const Parent& p = parent[static_cast<std::size_t>(len)][idx(v, j)];
        walk.emplace_back(p.edge, p.designated);
        vertices.push_back(v);
        v = p.vertex;
        if (p.designated) --j;
    }
    std::reverse(walk.begin(), walk.end());
    std::reverse(vertices.begin(), vertices.end());

    std::vector<int> seq{path->s};
    for (int x : vertices) seq.push_back(x);
    std::vector<std::pair<int, bool>> simple;
    std::vector<int> pos(static_cast<std::size_t>(V), -1);
    std::vector<int> kept{path->s};
    pos[static_cast<std::size_t>(path->s)] = 0;
    for (std::size_t step = 0; step < walk.size(); ++step) {
        int to = seq[step + 1];
        if (pos[static_cast<std::size_t>(to)] != -1) {
            // Drop the cycle back to the previous visit of `to`.
            int keep = pos[static_cast<std::size_t>(to)];
            while (static_cast<int>(kept.size()) > keep + 1) {
                pos[static_cast<std::size_t>(kept.back())] = -1;
                kept.pop_back();
                simple.pop_back();
            }
            continue;
        }
        simple.push_back(walk[step]);
        kept.push_back(to);
        pos[static_cast<std::size_t>(to)] = static_cast<int>(kept.size()) - 1;
    }

    IndexSet s2, s1;
    for (const auto& [edge, designated] : simple) {
        s2.push_back(edge);
        if (designated) s1.push_back(edge);
    }
    s2 = canonical_set(std::move(s2));
    s1 = canonical_set(std::move(s1));
    for (int e = 0; e < n && static_cast<int>(s1.size()) < k; ++e)
        if (!set_contains(s2, e)) s1.push_back(e);
    s1 = canonical_set(std::move(s1));
    if (static_cast<int>(s1.size()) != k) throw NoSolutionError("cannot complete S1 to k elements");
    return finish(inst, std::move(s1), std::move(s2));
}

// ---------------------------------------------------------------------------
// Matroid x matroid

namespace {

/// Ground set doubled to copies i (weight a+c) and n+i (weight c); sets may
/// use at most one copy per element and must project to an independent set.
class DoubledMatroid final : public MatroidOracle {
public:
    DoubledMatroid(MatroidOraclePtr base, int n) : base_(std::move(base)), n_(n) {}
    bool is_independent(const IndexSet& s) const override {
        IndexSet projected;
        projected.reserve(s.size());
        for (int e : s) projected.push_back(e < n_ ? e : e - n_);
        projected = canonical_set(std::move(projected));
        if (projected.size() != s.size()) return false; // both copies of some element
        return base_->is_independent(projected);
    }
    int ground_size() const override { return 2 * n_; }
    int rank() const override { return base_->rank(); }

private:
    MatroidOraclePtr base_;
    int n_;
};

} // namespace

Solution solve_diag_matroid_pair(const DiagonalInstance& inst) {
    require_diagonal(inst);
    MatroidOraclePtr base1, base2;
    try {
        base1 = as_matroid_oracle(inst.family1);
        base2 = as_matroid_oracle(inst.family2);
    } catch (const UnsupportedError&) {
        throw PreconditionError("diag-matroid requires matroid families");
    }
    for (const Cost& v : inst.a.a)
        if (v.is_negative()) throw PreconditionError("diag-matroid requires a >= 0");
    if (inst.c != inst.d) throw PreconditionError("diag-matroid requires c = d");

    const int n = inst.n;
    DoubledMatroid d1(base1, n), d2(base2, n);
    CostVector weights(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        weights[static_cast<std::size_t>(i)] = inst.a.a[static_cast<std::size_t>(i)] +
                                               inst.c[static_cast<std::size_t>(i)];
        weights[static_cast<std::size_t>(n + i)] = inst.c[static_cast<std::size_t>(i)];
    }
    std::vector<int> order(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) order[static_cast<std::size_t>(i)] = i;
    auto pair = detail::min_weight_disjoint_bases_ordered(d1, d2, weights, order);
    if (!pair) throw NoSolutionError("doubled ground set admits no disjoint bases");

    auto project = [&](const IndexSet& s) {
        IndexSet out;
        for (int e : s) out.push_back(e < n ? e : e - n);
        return canonical_set(std::move(out));
    };
    return finish(inst, project(pair->b1), project(pair->b2));
}

// ---------------------------------------------------------------------------
// Common-terminal path pair

Solution solve_diag_common_paths(const DiagonalInstance& inst) {
    require_diagonal(inst);
    const auto* p1 = inst.family1.as<StPath>();
    const auto* p2 = inst.family2.as<StPath>();
    if (!p1 || !p2) throw PreconditionError("diag-common-paths requires stpath families");
    if (!graphs_equal(p1->graph, p2->graph) || p1->s != p2->s || p1->t != p2->t)
        throw PreconditionError("diag-common-paths requires a shared graph and common terminals");
    for (const Cost& v : inst.a.a)
        if (v.is_negative()) throw PreconditionError("diag-common-paths requires a >= 0");
    if (inst.c != inst.d) throw PreconditionError("diag-common-paths requires c = d");
    for (const Cost& v : inst.c)
        if (v.is_negative()) throw PreconditionError("diag-common-paths requires c >= 0");

    const Graph& g = p1->graph;
    FlowNetwork net;
    net.num_vertices = g.num_vertices;
    net.supplies.assign(static_cast<std::size_t>(g.num_vertices), 0);
    net.supplies[static_cast<std::size_t>(p1->s)] = 2;
    net.supplies[static_cast<std::size_t>(p1->t)] = -2;

    struct ArcInfo {
        int edge;
        bool forward;
    };
    std::vector<ArcInfo> info;
    auto add_arc = [&](int u, int v, const Cost& cost, int edge, bool forward) {
        net.arcs.push_back({u, v, 1, cost, edge});
        info.push_back({edge, forward});
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        const std::size_t idx = static_cast<std::size_t>(e);
        const Cost cheap = inst.c[idx];
        add_arc(u, v, cheap, e, true);
        if (!g.directed && u != v) add_arc(v, u, cheap, e, false);
        if (!inst.a.a[idx].is_infinite()) {
            const Cost expensive = inst.a.a[idx] + inst.c[idx];
            add_arc(u, v, expensive, e, true);
            if (!g.directed && u != v) add_arc(v, u, expensive, e, false);
        }
    }

    FlowResult flow = min_cost_flow(net); // NoSolutionError when < 2 units fit

    if (!g.directed) {
        // Opposite traversals of one undirected edge cancel; an optimal flow
        // only admits zero-cost cancellations, so this never raises the cost.
        for (int e = 0; e < g.num_edges(); ++e) {
            auto positive = [&](bool forward) {
                std::vector<std::size_t> arcs;
                for (std::size_t k = 0; k < net.arcs.size(); ++k)
                    if (info[k].edge == e && info[k].forward == forward && flow.flow[k] > 0)
                        arcs.push_back(k);
                return arcs;
            };
            auto fwd = positive(true);
            auto bwd = positive(false);
            std::size_t cancel = std::min(fwd.size(), bwd.size());
            for (std::size_t k = 0; k < cancel; ++k) {
                --flow.flow[fwd[fwd.size() - 1 - k]]; // expensive copies first
                --flow.flow[bwd[bwd.size() - 1 - k]];
            }
        }
    }

    // Decompose into two s-t walks, smallest arc index first, dropping any
    // in-walk cycles (their cost is nonnegative).
    std::vector<long> remaining = flow.flow;
    IndexSet paths[2];
    for (int which = 0; which < 2; ++which) {
        std::vector<int> edge_seq;
        std::vector<int> vertex_seq{p1->s};
        int at = p1->s;
        while (at != p1->t) {
            int chosen = -1;
            for (std::size_t k = 0; k < net.arcs.size(); ++k)
                if (remaining[k] > 0 && net.arcs[k].tail == at) {
                    chosen = static_cast<int>(k);
                    break;
                }
            if (chosen == -1) throw NoSolutionError("flow decomposition failed");
            --remaining[static_cast<std::size_t>(chosen)];
            at = net.arcs[static_cast<std::size_t>(chosen)].head;
            edge_seq.push_back(info[static_cast<std::size_t>(chosen)].edge);
            vertex_seq.push_back(at);
        }
        // Excise revisits.
        std::vector<int> pos(static_cast<std::size_t>(g.num_vertices), -1);
        pos[static_cast<std::size_t>(p1->s)] = 0;
        std::vector<int> kept_vertices{p1->s};
        std::vector<int> kept_edges;
        for (std::size_t step = 0; step < edge_seq.size(); ++step) {
            int to = vertex_seq[step + 1];
            if (pos[static_cast<std::size_t>(to)] != -1) {
                int keep = pos[static_cast<std::size_t>(to)];
                while (static_cast<int>(kept_vertices.size()) > keep + 1) {
                    pos[static_cast<std::size_t>(kept_vertices.back())] = -1;
                    kept_vertices.pop_back();
                    kept_edges.pop_back();
                }
                continue;
            }
            kept_edges.push_back(edge_seq[step]);
            kept_vertices.push_back(to);
            pos[static_cast<std::size_t>(to)] = static_cast<int>(kept_vertices.size()) - 1;
        }
        paths[which] = canonical_set(IndexSet(kept_edges.begin(), kept_edges.end()));
    }

    return finish(inst, std::move(paths[0]), std::move(paths[1]));
}

} // namespace copic
