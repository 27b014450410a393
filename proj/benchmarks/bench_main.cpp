#include <benchmark/benchmark.h>

#include "copic/bruteforce.hpp"
#include "copic/diagonal.hpp"
#include "copic/disjoint_bases.hpp"
#include "copic/fixedrank.hpp"
#include "copic/flow.hpp"
#include "copic/hungarian.hpp"

namespace {

using namespace copic;

Instance dense_instance(int m, int n) {
    Instance inst;
    inst.m = m;
    inst.n = n;
    inst.q.assign(static_cast<std::size_t>(m), CostVector(static_cast<std::size_t>(n)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            inst.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Cost((i * 7 + j * 3) % 11 - 5);
    inst.c.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) inst.c[static_cast<std::size_t>(i)] = Cost(i % 5 - 2);
    inst.d.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) inst.d[static_cast<std::size_t>(j)] = Cost(j % 7 - 3);
    inst.family1 = FamilySpec::unconstrained(m);
    inst.family2 = FamilySpec::uniform(n, n / 2);
    return inst;
}

void BM_EvaluateObjective(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Instance inst = dense_instance(n, n);
    IndexSet s1, s2;
    for (int i = 0; i < n; i += 2) s1.push_back(i);
    for (int j = 1; j < n; j += 2) s2.push_back(j);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_objective(inst, s1, s2));
}
BENCHMARK(BM_EvaluateObjective)->Arg(16)->Arg(64);

void BM_LcopMst(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    FamilySpec family = FamilySpec::graphic(Graph::complete(p));
    CostVector w(static_cast<std::size_t>(family.ground_size()));
    for (std::size_t e = 0; e < w.size(); ++e) w[e] = Cost(static_cast<long>(e * 13 % 17) - 8);
    for (auto _ : state) benchmark::DoNotOptimize(lcop_solve(family, w));
}
BENCHMARK(BM_LcopMst)->Arg(6)->Arg(10);

void BM_DiagUniformPair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    DiagonalInstance inst;
    inst.n = n;
    inst.a.a.resize(static_cast<std::size_t>(n));
    inst.c.resize(static_cast<std::size_t>(n));
    inst.d.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        inst.a.a[static_cast<std::size_t>(i)] = Cost((i * 5) % 9 - 4);
        inst.c[static_cast<std::size_t>(i)] = Cost((i * 3) % 7 - 3);
        inst.d[static_cast<std::size_t>(i)] = Cost((i * 11) % 5 - 2);
    }
    inst.family1 = FamilySpec::uniform(n, n / 3);
    inst.family2 = FamilySpec::uniform(n, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_diag_uniform_pair(inst));
}
BENCHMARK(BM_DiagUniformPair)->Arg(12)->Arg(24);

void BM_Hungarian(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    CostMatrix costs(static_cast<std::size_t>(p), CostVector(static_cast<std::size_t>(p)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            costs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Cost((i * 31 + j * 17) % 23);
    for (auto _ : state) benchmark::DoNotOptimize(hungarian(costs));
}
BENCHMARK(BM_Hungarian)->Arg(6)->Arg(12);

void BM_MinCostFlowGrid(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    FlowNetwork net;
    net.num_vertices = k * k;
    net.supplies.assign(static_cast<std::size_t>(k * k), 0);
    net.supplies[0] = 2;
    net.supplies[static_cast<std::size_t>(k * k - 1)] = -2;
    auto id = [k](int r, int c) { return r * k + c; };
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            if (c + 1 < k) net.arcs.push_back({id(r, c), id(r, c + 1), 1, Cost((r + c) % 5), -1});
            if (r + 1 < k) net.arcs.push_back({id(r, c), id(r + 1, c), 1, Cost((r * c) % 7), -1});
        }
    for (auto _ : state) benchmark::DoNotOptimize(min_cost_flow(net));
}
BENCHMARK(BM_MinCostFlowGrid)->Arg(4)->Arg(8);

void BM_RankRCandidates(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    Instance inst = dense_instance(m, 4);
    RankFactorization fact = factorize(inst.q);
    for (auto _ : state) benchmark::DoNotOptimize(rankr_candidates(inst.c, fact, m));
}
BENCHMARK(BM_RankRCandidates)->Arg(8);

} // namespace

BENCHMARK_MAIN();
