#include "copic/family.hpp"

#include <algorithm>
#include <numeric>

#include "copic/errors.hpp"
#include "copic/graph_algos.hpp"
#include "copic/hungarian.hpp"

namespace copic {

// ---------------------------------------------------------------------------
// Construction

FamilySpec FamilySpec::unconstrained(int ground_size) {
    if (ground_size < 0) throw DomainError("negative ground size");
    return FamilySpec(Unconstrained{ground_size});
}

FamilySpec FamilySpec::uniform(int ground_size, int k) {
    if (ground_size < 0) throw DomainError("negative ground size");
    if (k < 0 || k > ground_size) throw DomainError("uniform matroid requires 0 <= k <= ground size");
    return FamilySpec(UniformMatroid{ground_size, k});
}

FamilySpec FamilySpec::partition(std::vector<IndexSet> parts, std::vector<int> quotas) {
    if (parts.size() != quotas.size()) throw DomainError("parts/quotas size mismatch");
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    std::vector<bool> seen(total, false);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (quotas[p] < 0 || quotas[p] > static_cast<int>(parts[p].size()))
            throw DomainError("partition quota out of range");
        for (int e : parts[p]) {
            if (e < 0 || static_cast<std::size_t>(e) >= total || seen[static_cast<std::size_t>(e)])
                throw DomainError("parts must partition the ground set");
            seen[static_cast<std::size_t>(e)] = true;
        }
    }
    for (auto& part : parts) std::sort(part.begin(), part.end());
    return FamilySpec(PartitionMatroid{std::move(parts), std::move(quotas)});
}

FamilySpec FamilySpec::graphic(Graph graph) {
    graph.check();
    if (graph.directed) throw DomainError("graphic matroid requires an undirected graph");
    return FamilySpec(GraphicMatroid{std::move(graph)});
}

FamilySpec FamilySpec::st_path(Graph graph, int s, int t) {
    graph.check();
    if (s < 0 || s >= graph.num_vertices || t < 0 || t >= graph.num_vertices)
        throw DomainError("path terminal out of range");
    if (s == t) throw DomainError("path family requires distinct terminals");
    return FamilySpec(StPath{std::move(graph), s, t});
}

FamilySpec FamilySpec::perfect_matching(int side_size) {
    if (side_size < 0) throw DomainError("negative matching side size");
    return FamilySpec(BipartitePerfectMatching{side_size});
}

FamilySpec::Kind FamilySpec::kind() const {
    return static_cast<Kind>(spec_.index());
}

int FamilySpec::ground_size() const {
    switch (kind()) {
    case Kind::Unconstrained: return as<Unconstrained>()->ground_size;
    case Kind::Uniform: return as<UniformMatroid>()->ground_size;
    case Kind::Partition: {
        std::size_t total = 0;
        for (const auto& part : as<PartitionMatroid>()->parts) total += part.size();
        return static_cast<int>(total);
    }
    case Kind::Graphic: return as<GraphicMatroid>()->graph.num_edges();
    case Kind::StPath: return as<StPath>()->graph.num_edges();
    case Kind::PerfectMatching: {
        int p = as<BipartitePerfectMatching>()->side_size;
        return p * p;
    }
    }
    return 0;
}

std::string FamilySpec::kind_name() const {
    switch (kind()) {
    case Kind::Unconstrained: return "unconstrained";
    case Kind::Uniform: return "uniform";
    case Kind::Partition: return "partition";
    case Kind::Graphic: return "graphic";
    case Kind::StPath: return "stpath";
    case Kind::PerfectMatching: return "pm";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Membership

namespace {

void check_subset(const FamilySpec& family, const IndexSet& s) {
    if (!is_canonical_set(s)) throw DomainError("index set is not canonical");
    if (!s.empty() && (s.front() < 0 || s.back() >= family.ground_size()))
        throw DomainError("index set outside the ground set");
}

bool is_simple_path_edge_set(const StPath& spec, const IndexSet& s) {
    if (s.empty()) return false;
    const Graph& g = spec.graph;

    if (g.directed) {
        std::vector<int> out_edge(static_cast<std::size_t>(g.num_vertices), -1);
        std::vector<int> in_deg(static_cast<std::size_t>(g.num_vertices), 0);
        for (int e : s) {
            auto [u, v] = g.edges[static_cast<std::size_t>(e)];
            if (out_edge[static_cast<std::size_t>(u)] != -1) return false;
            out_edge[static_cast<std::size_t>(u)] = e;
            if (++in_deg[static_cast<std::size_t>(v)] > 1) return false;
        }
        // Walk from s; must consume every edge, end at t, revisit nothing.
        std::vector<bool> visited(static_cast<std::size_t>(g.num_vertices), false);
        int at = spec.s;
        std::size_t used = 0;
        while (out_edge[static_cast<std::size_t>(at)] != -1) {
            if (visited[static_cast<std::size_t>(at)]) return false;
            visited[static_cast<std::size_t>(at)] = true;
            int e = out_edge[static_cast<std::size_t>(at)];
            at = g.edges[static_cast<std::size_t>(e)].second;
            ++used;
        }
        return at == spec.t && used == s.size() && in_deg[static_cast<std::size_t>(spec.s)] == 0;
    }

    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.num_vertices));
    for (int e : s) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (u == v) return false;
        incident[static_cast<std::size_t>(u)].push_back(e);
        incident[static_cast<std::size_t>(v)].push_back(e);
    }
    if (incident[static_cast<std::size_t>(spec.s)].size() != 1) return false;
    std::vector<bool> visited(static_cast<std::size_t>(g.num_vertices), false);
    int at = spec.s;
    int arrived_by = -1;
    std::size_t used = 0;
    while (true) {
        if (visited[static_cast<std::size_t>(at)]) return false;
        visited[static_cast<std::size_t>(at)] = true;
        const auto& inc = incident[static_cast<std::size_t>(at)];
        int next_edge = -1;
        for (int e : inc)
            if (e != arrived_by) {
                if (next_edge != -1) return false; // degree > 2
                next_edge = e;
            }
        if (at == spec.t) return next_edge == -1 && used == s.size();
        if (next_edge == -1) return false; // dead end before t
        if (static_cast<int>(inc.size()) > 2) return false;
        auto [u, v] = g.edges[static_cast<std::size_t>(next_edge)];
        at = (u == at) ? v : u;
        arrived_by = next_edge;
        ++used;
    }
}

} // namespace

bool contains(const FamilySpec& family, const IndexSet& s) {
    check_subset(family, s);
    switch (family.kind()) {
    case FamilySpec::Kind::Unconstrained:
        return true;
    case FamilySpec::Kind::Uniform:
        return static_cast<int>(s.size()) == family.as<UniformMatroid>()->k;
    case FamilySpec::Kind::Partition: {
        const auto* pm = family.as<PartitionMatroid>();
        std::vector<int> part_of(static_cast<std::size_t>(family.ground_size()), -1);
        for (std::size_t p = 0; p < pm->parts.size(); ++p)
            for (int e : pm->parts[p]) part_of[static_cast<std::size_t>(e)] = static_cast<int>(p);
        std::vector<int> used(pm->parts.size(), 0);
        for (int e : s) ++used[static_cast<std::size_t>(part_of[static_cast<std::size_t>(e)])];
        for (std::size_t p = 0; p < pm->parts.size(); ++p)
            if (used[p] != pm->quotas[p]) return false;
        return true;
    }
    case FamilySpec::Kind::Graphic: {
        const auto* gm = family.as<GraphicMatroid>();
        if (static_cast<int>(s.size()) != graphic_rank(gm->graph)) return false;
        DisjointSets dsu(gm->graph.num_vertices);
        for (int e : s) {
            auto [u, v] = gm->graph.edges[static_cast<std::size_t>(e)];
            if (!dsu.unite(u, v)) return false;
        }
        return true;
    }
    case FamilySpec::Kind::StPath:
        return is_simple_path_edge_set(*family.as<StPath>(), s);
    case FamilySpec::Kind::PerfectMatching: {
        const int p = family.as<BipartitePerfectMatching>()->side_size;
        if (static_cast<int>(s.size()) != p) return false;
        std::vector<bool> left(static_cast<std::size_t>(p), false), right(static_cast<std::size_t>(p), false);
        for (int e : s) {
            int i = e / p, j = e % p;
            if (left[static_cast<std::size_t>(i)] || right[static_cast<std::size_t>(j)]) return false;
            left[static_cast<std::size_t>(i)] = right[static_cast<std::size_t>(j)] = true;
        }
        return true;
    }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class Emitter {
public:
    Emitter(const std::function<void(const IndexSet&)>& fn, std::size_t cap) : fn_(fn), cap_(cap) {}
    void operator()(const IndexSet& s) {
        if (++count_ > cap_) throw EnumerationCapError("family enumeration exceeds cap", cap_);
        fn_(s);
    }

private:
    const std::function<void(const IndexSet&)>& fn_;
    std::size_t cap_;
    std::size_t count_ = 0;
};

/// k-subsets of [n] in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    IndexSet cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        fn(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void enumerate_partition(const PartitionMatroid& pm, int ground, Emitter& emit) {
    std::vector<int> part_of(static_cast<std::size_t>(ground), -1);
    for (std::size_t p = 0; p < pm.parts.size(); ++p)
        for (int e : pm.parts[p]) part_of[static_cast<std::size_t>(e)] = static_cast<int>(p);
    // Elements remaining in each part from index i onward.
    std::vector<std::vector<int>> tail(static_cast<std::size_t>(ground + 1),
                                       std::vector<int>(pm.parts.size(), 0));
    for (int i = ground - 1; i >= 0; --i) {
        tail[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i + 1)];
        ++tail[static_cast<std::size_t>(i)][static_cast<std::size_t>(part_of[static_cast<std::size_t>(i)])];
    }

    IndexSet cur;
    std::vector<int> need(pm.quotas);
    auto feasible = [&](int from) {
        for (std::size_t p = 0; p < need.size(); ++p)
            if (need[p] > tail[static_cast<std::size_t>(from)][p]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int from) -> void {
        if (!feasible(from)) return;
        bool done = std::all_of(need.begin(), need.end(), [](int x) { return x == 0; });
        if (done) {
            emit(cur);
            return;
        }
        for (int e = from; e < ground; ++e) {
            int p = part_of[static_cast<std::size_t>(e)];
            if (need[static_cast<std::size_t>(p)] == 0) continue;
            if (!feasible(e)) break;
            --need[static_cast<std::size_t>(p)];
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
            ++need[static_cast<std::size_t>(p)];
        }
    };
    rec(rec, 0);
}

void enumerate_graphic(const GraphicMatroid& gm, Emitter& emit) {
    const Graph& g = gm.graph;
    const int rank = graphic_rank(g);
    const int m = g.num_edges();
    IndexSet cur;
    auto rec = [&](auto&& self, int from, DisjointSets dsu) -> void {
        if (static_cast<int>(cur.size()) == rank) {
            emit(cur);
            return;
        }
        int needed = rank - static_cast<int>(cur.size());
        for (int e = from; e + needed <= m; ++e) {
            auto [u, v] = g.edges[static_cast<std::size_t>(e)];
            DisjointSets next = dsu;
            if (!next.unite(u, v)) continue;
            cur.push_back(e);
            self(self, e + 1, std::move(next));
            cur.pop_back();
        }
    };
    rec(rec, 0, DisjointSets(g.num_vertices));
}

void enumerate_paths(const StPath& spec, Emitter& emit, std::size_t cap) {
    const Graph& g = spec.graph;
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.num_vertices));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        incident[static_cast<std::size_t>(u)].push_back(e);
        if (!g.directed && u != v) incident[static_cast<std::size_t>(v)].push_back(e);
    }
    std::vector<IndexSet> found;
    std::vector<bool> on_path(static_cast<std::size_t>(g.num_vertices), false);
    IndexSet cur;
    auto rec = [&](auto&& self, int at) -> void {
        if (at == spec.t) {
            found.push_back(canonical_set(cur));
            if (found.size() > cap) throw EnumerationCapError("family enumeration exceeds cap", cap);
            return;
        }
        on_path[static_cast<std::size_t>(at)] = true;
        for (int e : incident[static_cast<std::size_t>(at)]) {
            auto [u, v] = g.edges[static_cast<std::size_t>(e)];
            int next = (u == at) ? v : u;
            if (u == v || on_path[static_cast<std::size_t>(next)]) continue;
            cur.push_back(e);
            self(self, next);
            cur.pop_back();
        }
        on_path[static_cast<std::size_t>(at)] = false;
    };
    rec(rec, spec.s);
    std::sort(found.begin(), found.end(), graded_lex_less);
    for (const auto& s : found) emit(s);
}

void enumerate_matchings(int p, Emitter& emit) {
    std::vector<int> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        IndexSet s;
        s.reserve(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) s.push_back(i * p + perm[static_cast<std::size_t>(i)]);
        emit(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

void for_each_member(const FamilySpec& family, const std::function<void(const IndexSet&)>& fn,
                     std::size_t cap) {
    Emitter emit(fn, cap);
    switch (family.kind()) {
    case FamilySpec::Kind::Unconstrained: {
        int n = family.ground_size();
        if (n >= 64 || (n >= 1 && (std::size_t{1} << n) > cap))
            throw EnumerationCapError("family enumeration exceeds cap", cap);
        for (int k = 0; k <= n; ++k) for_each_combination(n, k, [&](const IndexSet& s) { emit(s); });
        return;
    }
    case FamilySpec::Kind::Uniform: {
        const auto* u = family.as<UniformMatroid>();
        for_each_combination(u->ground_size, u->k, [&](const IndexSet& s) { emit(s); });
        return;
    }
    case FamilySpec::Kind::Partition:
        enumerate_partition(*family.as<PartitionMatroid>(), family.ground_size(), emit);
        return;
    case FamilySpec::Kind::Graphic:
        enumerate_graphic(*family.as<GraphicMatroid>(), emit);
        return;
    case FamilySpec::Kind::StPath:
        enumerate_paths(*family.as<StPath>(), emit, cap);
        return;
    case FamilySpec::Kind::PerfectMatching:
        enumerate_matchings(family.as<BipartitePerfectMatching>()->side_size, emit);
        return;
    }
}

std::vector<IndexSet> enumerate_family(const FamilySpec& family, std::size_t cap) {
    std::vector<IndexSet> out;
    for_each_member(family, [&](const IndexSet& s) { out.push_back(s); }, cap);
    return out;
}

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t limit) {
    if (a == 0 || b == 0) return 0;
    if (a > limit / b) return limit + 1;
    std::size_t r = a * b;
    return r > limit ? limit + 1 : r;
}

std::size_t binomial_capped(int n, int k, std::size_t limit) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = saturating_mul(result, static_cast<std::size_t>(n - k + i), limit);
        if (result > limit) return limit + 1;
        result /= static_cast<std::size_t>(i);
    }
    return result;
}

} // namespace

std::size_t count_members(const FamilySpec& family, std::size_t cap) {
    switch (family.kind()) {
    case FamilySpec::Kind::Unconstrained: {
        int n = family.ground_size();
        if (n >= 63) return cap + 1;
        std::size_t total = std::size_t{1} << n;
        return total > cap ? cap + 1 : total;
    }
    case FamilySpec::Kind::Uniform: {
        const auto* u = family.as<UniformMatroid>();
        return binomial_capped(u->ground_size, u->k, cap);
    }
    case FamilySpec::Kind::Partition: {
        const auto* pm = family.as<PartitionMatroid>();
        std::size_t total = 1;
        for (std::size_t p = 0; p < pm->parts.size(); ++p) {
            total = saturating_mul(
                total, binomial_capped(static_cast<int>(pm->parts[p].size()), pm->quotas[p], cap), cap);
            if (total > cap) return cap + 1;
        }
        return total;
    }
    case FamilySpec::Kind::PerfectMatching: {
        int p = family.as<BipartitePerfectMatching>()->side_size;
        std::size_t total = 1;
        for (int i = 2; i <= p; ++i) {
            total = saturating_mul(total, static_cast<std::size_t>(i), cap);
            if (total > cap) return cap + 1;
        }
        return total;
    }
    default: {
        std::size_t count = 0;
        try {
            for_each_member(family, [&](const IndexSet&) { ++count; }, cap);
        } catch (const EnumerationCapError&) {
            return cap + 1;
        }
        return count;
    }
    }
}

// ---------------------------------------------------------------------------
// Linear-cost optimization

namespace {

LcopResult pick_k_smallest(const std::vector<int>& candidates, const CostVector& w, int k) {
    std::vector<int> order = candidates;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
    });
    IndexSet chosen(order.begin(), order.begin() + k);
    std::sort(chosen.begin(), chosen.end());
    return {chosen, sum_over(w, chosen)};
}

std::optional<LcopResult> lcop_path(const StPath& spec, const CostVector& w,
                                    const std::vector<bool>& allowed) {
    const Graph& g = spec.graph;
    Graph filtered;
    filtered.num_vertices = g.num_vertices;
    filtered.directed = g.directed;
    std::vector<int> back;
    CostVector fw;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!allowed.empty() && !allowed[static_cast<std::size_t>(e)]) continue;
        if (!g.directed && w[static_cast<std::size_t>(e)].is_negative())
            throw UnsupportedError("undirected path family does not support negative weights");
        filtered.edges.push_back(g.edges[static_cast<std::size_t>(e)]);
        back.push_back(e);
        fw.push_back(w[static_cast<std::size_t>(e)]);
    }
    auto sp = bellman_ford(filtered, spec.s, fw);
    if (!sp.dist[static_cast<std::size_t>(spec.t)]) return std::nullopt;
    IndexSet edges;
    for (int v = spec.t; v != spec.s;) {
        int fe = sp.parent_edge[static_cast<std::size_t>(v)];
        edges.push_back(back[static_cast<std::size_t>(fe)]);
        auto [a, b] = filtered.edges[static_cast<std::size_t>(fe)];
        v = filtered.directed ? a : (a == v ? b : a);
    }
    std::sort(edges.begin(), edges.end());
    return LcopResult{edges, *sp.dist[static_cast<std::size_t>(spec.t)]};
}

std::optional<LcopResult> lcop_impl(const FamilySpec& family, const CostVector& w,
                                    const std::vector<bool>& allowed) {
    const int n = family.ground_size();
    auto is_allowed = [&](int e) { return allowed.empty() || allowed[static_cast<std::size_t>(e)]; };

    switch (family.kind()) {
    case FamilySpec::Kind::Unconstrained: {
        IndexSet s;
        for (int i = 0; i < n; ++i)
            if (is_allowed(i) && w[static_cast<std::size_t>(i)].is_negative()) s.push_back(i);
        return LcopResult{s, sum_over(w, s)};
    }
    case FamilySpec::Kind::Uniform: {
        const auto* u = family.as<UniformMatroid>();
        std::vector<int> candidates;
        for (int i = 0; i < n; ++i)
            if (is_allowed(i)) candidates.push_back(i);
        if (static_cast<int>(candidates.size()) < u->k) return std::nullopt;
        return pick_k_smallest(candidates, w, u->k);
    }
    case FamilySpec::Kind::Partition: {
        const auto* pm = family.as<PartitionMatroid>();
        IndexSet chosen;
        Cost value(0);
        for (std::size_t p = 0; p < pm->parts.size(); ++p) {
            std::vector<int> candidates;
            for (int e : pm->parts[p])
                if (is_allowed(e)) candidates.push_back(e);
            if (static_cast<int>(candidates.size()) < pm->quotas[p]) return std::nullopt;
            auto part_pick = pick_k_smallest(candidates, w, pm->quotas[p]);
            chosen.insert(chosen.end(), part_pick.solution.begin(), part_pick.solution.end());
            value += part_pick.value;
        }
        std::sort(chosen.begin(), chosen.end());
        return LcopResult{chosen, value};
    }
    case FamilySpec::Kind::Graphic: {
        const auto* gm = family.as<GraphicMatroid>();
        IndexSet tree = mst(gm->graph, w, allowed);
        if (static_cast<int>(tree.size()) != graphic_rank(gm->graph)) return std::nullopt;
        return LcopResult{tree, sum_over(w, tree)};
    }
    case FamilySpec::Kind::StPath:
        return lcop_path(*family.as<StPath>(), w, allowed);
    case FamilySpec::Kind::PerfectMatching: {
        const int p = family.as<BipartitePerfectMatching>()->side_size;
        CostMatrix costs(static_cast<std::size_t>(p), CostVector(static_cast<std::size_t>(p)));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                int e = i * p + j;
                costs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    is_allowed(e) ? w[static_cast<std::size_t>(e)] : Cost::infinity();
            }
        auto matched = hungarian_allow_forbidden(costs);
        if (!matched) return std::nullopt;
        IndexSet s;
        for (int i = 0; i < p; ++i) s.push_back(i * p + matched->assignment[static_cast<std::size_t>(i)]);
        return LcopResult{s, matched->value};
    }
    }
    return std::nullopt;
}

} // namespace

LcopResult lcop_solve(const FamilySpec& family, const CostVector& w) {
    if (static_cast<int>(w.size()) != family.ground_size()) throw DomainError("weight length mismatch");
    for (const Cost& x : w)
        if (x.is_infinite()) throw DomainError("lcop_solve requires finite weights");
    auto result = lcop_impl(family, w, {});
    if (!result) throw NoSolutionError("family has no feasible solution");
    return *result;
}

std::optional<LcopResult> lcop_solve_restricted(const FamilySpec& family, const CostVector& w,
                                                const std::vector<bool>& allowed) {
    if (static_cast<int>(w.size()) != family.ground_size()) throw DomainError("weight length mismatch");
    if (!allowed.empty() && allowed.size() != w.size()) throw DomainError("allowed mask length mismatch");
    for (std::size_t i = 0; i < w.size(); ++i)
        if ((allowed.empty() || allowed[i]) && w[i].is_infinite())
            throw DomainError("lcop_solve requires finite weights on allowed elements");
    return lcop_impl(family, w, allowed);
}

} // namespace copic
