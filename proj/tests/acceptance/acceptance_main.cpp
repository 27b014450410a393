// Acceptance suite: one line per criterion, nonzero exit when any fails.
// The CLI determinism criterion locates the binary through the COPIC_CLI
// environment variable (set by ctest).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "copic/bruteforce.hpp"
#include "copic/diagonal.hpp"
#include "copic/dispatch.hpp"
#include "copic/disjoint_bases.hpp"
#include "copic/errors.hpp"
#include "copic/fixedrank.hpp"
#include "copic/flow.hpp"
#include "copic/generate.hpp"
#include "copic/hungarian.hpp"
#include "copic/jsonio.hpp"
#include "copic/linearize.hpp"
#include "copic/reductions.hpp"
#include "support/test_support.hpp"

namespace {

using namespace copic;
using namespace copic::testsupport;

struct Failure {
    std::string reason;
};

void require(bool ok, const std::string& reason) {
    if (!ok) throw Failure{reason};
}

class Harness {
public:
    void criterion(int number, const std::string& title, const std::function<void()>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            body();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.reason;
            ++failures_;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string("exception: ") + e.what();
            ++failures_;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "[" << verdict << "] criterion " << number << ": " << title << " (" << ms
                  << " ms)";
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
    }

    int exit_code() const { return failures_ == 0 ? 0 : 1; }

private:
    int failures_ = 0;
};

std::string describe(const DiagonalInstance& inst, const char* solver) {
    std::ostringstream out;
    out << solver << " n=" << inst.n << " a=(";
    for (const Cost& v : inst.a.a) out << v << ",";
    out << ") c=(";
    for (const Cost& v : inst.c) out << v << ",";
    out << ") d=(";
    for (const Cost& v : inst.d) out << v << ",";
    out << ")";
    return out.str();
}

void check_diag_solver(const DiagonalInstance& inst, Solution (*solver)(const DiagonalInstance&),
                       const char* name) {
    Solution got = solver(inst);
    Solution expected = solve_bruteforce(to_instance(inst));
    require(got.objective == expected.objective,
            "objective mismatch on " + describe(inst, name) + ": got " + got.objective.str() +
                ", expected " + expected.objective.str());
    require(contains(inst.family1, got.s1) && contains(inst.family2, got.s2),
            std::string(name) + " returned an infeasible pair");
    require(evaluate_objective(to_instance(inst), got.s1, got.s2) == got.objective,
            std::string(name) + " objective does not match its own selection");
}

FamilySpec random_matroid_family(Rng& rng, int ground) {
    switch (rng.pick(0, 2)) {
    case 0:
        return FamilySpec::uniform(ground, static_cast<int>(rng.pick(0, ground)));
    case 1: {
        int split = ground == 1 ? 1 : static_cast<int>(rng.pick(1, ground - 1));
        IndexSet left, right;
        for (int i = 0; i < split; ++i) left.push_back(i);
        for (int i = split; i < ground; ++i) right.push_back(i);
        std::vector<IndexSet> parts{left};
        std::vector<int> quotas{static_cast<int>(rng.pick(0, split))};
        if (!right.empty()) {
            parts.push_back(right);
            quotas.push_back(static_cast<int>(rng.pick(0, ground - split)));
        }
        return FamilySpec::partition(std::move(parts), std::move(quotas));
    }
    default: {
        int v = std::max(2, ground - static_cast<int>(rng.pick(0, 2)));
        if (v - 1 > ground) v = ground + 1;
        return FamilySpec::graphic(random_connected_graph(rng, v, ground - (v - 1)));
    }
    }
}

// --------------------------------------------------------------------------
// Criterion 1: diagonal solvers match brute force inside their classes.

void criterion_diagonal() {
    const int kTrials = 200;

    {
        Rng rng(101);
        for (int t = 0; t < kTrials; ++t) {
            int n = static_cast<int>(rng.pick(1, 8));
            check_diag_solver(make_diagonal(FamilySpec::unconstrained(n), FamilySpec::unconstrained(n),
                                            random_vector(rng, n, -9, 9), random_vector(rng, n, -9, 9),
                                            random_vector(rng, n, -9, 9)),
                              solve_diag_unconstrained_pair, "diag-unconstrained");
        }
    }
    {
        Rng rng(102);
        for (int t = 0; t < kTrials; ++t) {
            int n = static_cast<int>(rng.pick(1, 8));
            FamilySpec constrained = random_matroid_family(rng, n);
            bool mirrored = rng.chance(50);
            DiagonalInstance inst =
                mirrored ? make_diagonal(FamilySpec::unconstrained(n), constrained,
                                         random_vector(rng, n, -9, 9), random_vector(rng, n, -9, 9),
                                         random_vector(rng, n, -9, 9))
                         : make_diagonal(constrained, FamilySpec::unconstrained(n),
                                         random_vector(rng, n, -9, 9), random_vector(rng, n, -9, 9),
                                         random_vector(rng, n, -9, 9));
            check_diag_solver(inst, solve_diag_one_side_unconstrained, "diag-one-side");
        }
    }
    {
        Rng rng(103);
        for (int t = 0; t < kTrials; ++t) {
            int n = static_cast<int>(rng.pick(1, 8));
            check_diag_solver(
                make_diagonal(FamilySpec::uniform(n, static_cast<int>(rng.pick(0, n))),
                              FamilySpec::uniform(n, static_cast<int>(rng.pick(0, n))),
                              random_vector(rng, n, -9, 9), random_vector(rng, n, -9, 9),
                              random_vector(rng, n, -9, 9)),
                solve_diag_uniform_pair, "diag-uniform");
        }
    }
    {
        Rng rng(104);
        for (int t = 0; t < kTrials; ++t) {
            int v = static_cast<int>(rng.pick(2, 6));
            Graph g = random_st_graph(rng, v, static_cast<int>(rng.pick(0, 3)), rng.chance(50));
            int n = g.num_edges();
            check_diag_solver(
                make_diagonal(FamilySpec::uniform(n, static_cast<int>(rng.pick(0, n))),
                              FamilySpec::st_path(g, 0, v - 1), random_vector(rng, n, 0, 9),
                              CostVector(static_cast<std::size_t>(n), Cost(0)),
                              random_vector(rng, n, 0, 9)),
                solve_diag_uniform_path, "diag-uniform-path");
        }
    }
    {
        Rng rng(105);
        for (int t = 0; t < kTrials; ++t) {
            int n = static_cast<int>(rng.pick(1, 8));
            FamilySpec f1 = random_matroid_family(rng, n);
            FamilySpec f2 = random_matroid_family(rng, n);
            CostVector c = random_vector(rng, n, -9, 9);
            check_diag_solver(make_diagonal(f1, f2, random_vector(rng, n, 0, 9), c, c),
                              solve_diag_matroid_pair, "diag-matroid");
        }
    }
    {
        Rng rng(106);
        for (int t = 0; t < kTrials; ++t) {
            int v = static_cast<int>(rng.pick(2, 6));
            Graph g = random_st_graph(rng, v, static_cast<int>(rng.pick(0, 3)), rng.chance(50));
            int n = g.num_edges();
            FamilySpec f = FamilySpec::st_path(g, 0, v - 1);
            CostVector c = random_vector(rng, n, 0, 9);
            check_diag_solver(make_diagonal(f, f, random_vector(rng, n, 0, 9), c, c),
                              solve_diag_common_paths, "diag-common-paths");
        }
    }
}

// --------------------------------------------------------------------------
// Criterion 2: rank-r candidate coverage and optimality.

void criterion_rank_coverage() {
    Rng rng(202);
    int done = 0;
    while (done < 100) {
        int m = static_cast<int>(rng.pick(2, 8));
        int target_rank = static_cast<int>(rng.pick(1, 3));
        CostMatrix q;
        FamilySpec f2 = FamilySpec::unconstrained(3);
        switch (rng.pick(0, 2)) {
        case 0: f2 = FamilySpec::uniform(4, static_cast<int>(rng.pick(1, 3))); break;
        case 1: f2 = FamilySpec::graphic(Graph::complete(4)); break;
        default: f2 = FamilySpec::unconstrained(3); break;
        }
        const int n = f2.ground_size();
        q.assign(static_cast<std::size_t>(m), CostVector(static_cast<std::size_t>(n), Cost(0)));
        for (int p = 0; p < target_rank; ++p) {
            CostVector a = random_vector(rng, m, -4, 4), b = random_vector(rng, n, -4, 4);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
        RankFactorization fact = factorize(q);
        if (fact.r < 1 || fact.r > 3) continue;

        Instance inst = make_instance(FamilySpec::unconstrained(m), f2, q,
                                      random_vector(rng, m, -9, 9), random_vector(rng, n, -9, 9));
        Solution expected = solve_bruteforce(inst);
        Solution got = solve_rankr_unconstrained_side(inst, fact);
        require(got.objective == expected.objective,
                "rank-r objective mismatch (m=" + std::to_string(m) +
                    ", r=" + std::to_string(fact.r) + ")");
        CandidateSet candidates = rankr_candidates(inst.c, fact, inst.m);
        bool found = false;
        for (const IndexSet& x : candidates.candidates)
            if (x == expected.s1) {
                found = true;
                break;
            }
        require(found, "brute-force optimal support missing from the candidate set (m=" +
                           std::to_string(m) + ", r=" + std::to_string(fact.r) + ")");
        ++done;
    }
}

// --------------------------------------------------------------------------
// Criterion 3: the alpha-approximation bound with a 2-approximate oracle.

void criterion_approximation() {
    Rng rng(303);
    ApproximateLcopOracle stub;
    stub.alpha = Cost(2);
    stub.solve = [](const FamilySpec& family, const CostVector& w) {
        LcopResult best = lcop_solve(family, w);
        if (family.kind() == FamilySpec::Kind::Uniform) {
            const auto* u = family.as<UniformMatroid>();
            IndexSet greedy;
            for (int i = u->ground_size - 1; i >= 0 && static_cast<int>(greedy.size()) < u->k; --i)
                greedy.push_back(i);
            greedy = canonical_set(std::move(greedy));
            Cost value = sum_over(w, greedy);
            if (value <= Cost(2) * best.value) return LcopResult{greedy, value};
        }
        return best;
    };

    int done = 0;
    while (done < 30) {
        int m = static_cast<int>(rng.pick(2, 6));
        int n = static_cast<int>(rng.pick(2, 5));
        CostMatrix q(static_cast<std::size_t>(m), CostVector(static_cast<std::size_t>(n), Cost(0)));
        CostVector a = random_vector(rng, m, 0, 4), b = random_vector(rng, n, 0, 4);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        Instance inst = make_instance(FamilySpec::unconstrained(m),
                                      FamilySpec::uniform(n, static_cast<int>(rng.pick(1, n))), q,
                                      random_vector(rng, m, 0, 9), random_vector(rng, n, 0, 9));
        RankFactorization fact = factorize(q);
        Solution approx = solve_rankr_with_approximate_oracle(inst, fact, stub);
        Cost optimum = solve_bruteforce(inst).objective;
        require(approx.objective <= Cost(2) * optimum,
                "approximate objective " + approx.objective.str() + " exceeds twice the optimum " +
                    optimum.str());
        ++done;
    }
}

// --------------------------------------------------------------------------
// Criterion 4: linearization checks agree and generated instances pass.

void criterion_linearization() {
    Rng rng(404);
    std::vector<std::pair<FamilySpec, FamilySpec>> pairs;
    pairs.emplace_back(FamilySpec::uniform(5, 2), FamilySpec::uniform(6, 3));
    pairs.emplace_back(FamilySpec::graphic(Graph::complete(4)), FamilySpec::graphic(Graph::complete(3)));
    pairs.emplace_back(FamilySpec::graphic(Graph::complete(4)), FamilySpec::uniform(5, 2));
    pairs.emplace_back(FamilySpec::perfect_matching(2), FamilySpec::uniform(5, 2));
    pairs.emplace_back(FamilySpec::perfect_matching(2), FamilySpec::graphic(Graph::complete(4)));
    pairs.emplace_back(FamilySpec::perfect_matching(2), FamilySpec::perfect_matching(2));
    pairs.emplace_back(FamilySpec::unconstrained(5), FamilySpec::uniform(5, 2));
    pairs.emplace_back(FamilySpec::graphic(Graph::complete(4)), FamilySpec::unconstrained(6));

    for (const auto& [f1, f2] : pairs) {
        const int m = f1.ground_size(), n = f2.ground_size();
        require(m <= 6 && n <= 6, "family pair exceeds the desk-scale bound");
        for (int trial = 0; trial < 100; ++trial) {
            CostMatrix q;
            if (rng.chance(50)) {
                q = random_matrix(rng, m, n, -4, 4);
            } else {
                CostVector u = random_vector(rng, m, -4, 4), v = random_vector(rng, n, -4, 4);
                q.assign(static_cast<std::size_t>(m), CostVector(static_cast<std::size_t>(n)));
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < n; ++j)
                        q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                            (f1.kind() == FamilySpec::Kind::Unconstrained
                                 ? Cost(0)
                                 : v[static_cast<std::size_t>(j)]) +
                            (f2.kind() == FamilySpec::Kind::Unconstrained
                                 ? Cost(0)
                                 : u[static_cast<std::size_t>(i)]);
            }
            Instance inst = make_instance(f1, f2, q, CostVector(static_cast<std::size_t>(m), Cost(0)),
                                          CostVector(static_cast<std::size_t>(n), Cost(0)));
            LinearizabilityCertificate structural = check_copic_linearizable(inst);
            LinearizabilityCertificate brute = linearizable_bruteforce(inst);
            require(structural.linearizable == brute.linearizable,
                    "verdict disagreement on a " + f1.kind_name() + " x " + f2.kind_name() +
                        " instance");
            for (const LinearizabilityCertificate* cert : {&structural, &brute}) {
                if (!cert->linearizable) continue;
                for (const IndexSet& s1 : enumerate_family(f1))
                    for (const IndexSet& s2 : enumerate_family(f2)) {
                        Cost lhs = sum_over(cert->a, s1) + sum_over(cert->b, s2);
                        Cost rhs(0);
                        for (int i : s1)
                            for (int j : s2)
                                rhs += q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                        require(lhs == rhs, "linearization vectors fail to reproduce a pair");
                    }
            }
        }
    }

    // Generator acceptance: 100 linearizable instances across family shapes.
    struct Config {
        const char* f1;
        const char* f2;
        int m;
        int n;
    };
    const Config configs[] = {
        {"uniform:2", "uniform:2", 5, 5},
        {"graphic:complete:4", "uniform:2", -1, 5},
        {"pm:2", "graphic:complete:3", -1, -1},
        {"unconstrained", "uniform:2", 4, 5},
        {"stpath:random:4:directed", "uniform:2", 5, 5},
    };
    int accepted = 0;
    for (const Config& config : configs)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            GenOptions options;
            options.family1 = config.f1;
            options.family2 = config.f2;
            options.m = config.m;
            options.n = config.n;
            options.structure = "linearizable";
            options.seed = seed;
            ParsedInstance parsed = parse_instance_json(generate_instance_json(options));
            LinearizabilityCertificate cert = linearizable_bruteforce(parsed.instance);
            require(cert.linearizable, "generated linearizable instance rejected (" +
                                           std::string(config.f1) + " x " + config.f2 + " seed " +
                                           std::to_string(seed) + ")");
            ++accepted;
        }
    require(accepted == 100, "expected 100 generator acceptances");
}

// --------------------------------------------------------------------------
// Criterion 5: disjointness milestones.

void criterion_disjointness() {
    FamilySpec k4 = FamilySpec::graphic(Graph::complete(4));
    Solution s = solve_diag_matroid_pair(make_diagonal(k4, k4, CostVector(6, Cost(1)),
                                                       CostVector(6, Cost(0)), CostVector(6, Cost(0))));
    require(s.objective == Cost(0), "K4 spanning trees should be edge-disjoint");
    require(set_intersection(s.s1, s.s2).empty(), "K4 witness trees are not disjoint");

    FamilySpec k3 = FamilySpec::graphic(Graph::complete(3));
    s = solve_diag_matroid_pair(make_diagonal(k3, k3, CostVector(3, Cost(1)), CostVector(3, Cost(0)),
                                              CostVector(3, Cost(0))));
    require(s.objective == Cost(1), "K3 spanning trees must overlap exactly once");

    Graph single;
    single.num_vertices = 2;
    single.edges = {{0, 1}};
    FamilySpec path = FamilySpec::st_path(single, 0, 1);
    bool no_solution = false;
    try {
        solve_diag_common_paths(make_diagonal(path, path, {Cost::infinity()}, {Cost(0)}, {Cost(0)}));
    } catch (const NoSolutionError&) {
        no_solution = true;
    }
    require(no_solution, "forbidden overlap on the only edge must report no-solution");
}

// --------------------------------------------------------------------------
// Criterion 6: k-card cut bijection on the 3x3 bipartite digraph.

void criterion_kcard() {
    Rng rng(606);
    KCardCutInstance inst;
    inst.m = 3;
    inst.n = 3;
    inst.q = random_matrix(rng, 3, 3, 0, 9);
    auto solver = [](const Instance& instance) { return solve_bruteforce(instance); };

    for (long k = 1; k <= 9; ++k) {
        inst.k = k;
        std::optional<Cost> expected;
        for (int lmask = 0; lmask < 8; ++lmask)
            for (int rmask = 0; rmask < 8; ++rmask) {
                long cardinality = 0;
                Cost cost(0);
                for (int i = 0; i < 3; ++i) {
                    if (!(lmask & (1 << i))) continue;
                    for (int j = 0; j < 3; ++j) {
                        if (rmask & (1 << j)) continue; // j stays inside S
                        ++cardinality;
                        cost += inst.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    }
                }
                if (cardinality != k) continue;
                if (!expected || cost < *expected) expected = cost;
            }
        if (!expected) {
            bool threw = false;
            try {
                solve_kcard_cut_via_copic(inst, solver);
            } catch (const NoSolutionError&) {
                threw = true;
            }
            require(threw, "sweep should report no-solution for k=" + std::to_string(k));
            continue;
        }
        KCardCutResult got = solve_kcard_cut_via_copic(inst, solver);
        require(got.cost == *expected, "cut cost mismatch at k=" + std::to_string(k));
    }
}

// --------------------------------------------------------------------------
// Criterion 7: kernel correctness against exhaustive oracles.

void criterion_kernels() {
    {
        Rng rng(707);
        for (int trial = 0; trial < 100; ++trial) {
            FlowNetwork net;
            net.num_vertices = static_cast<int>(rng.pick(2, 8));
            net.supplies.assign(static_cast<std::size_t>(net.num_vertices), 0);
            long amount = rng.pick(1, 2);
            net.supplies[0] = amount;
            net.supplies[static_cast<std::size_t>(net.num_vertices - 1)] = -amount;
            int arcs = static_cast<int>(rng.pick(2, 9));
            for (int a = 0; a < arcs; ++a) {
                int u = static_cast<int>(rng.pick(0, net.num_vertices - 1));
                int v = static_cast<int>(rng.pick(0, net.num_vertices - 1));
                if (u == v) continue;
                net.arcs.push_back({u, v, rng.pick(1, 2), rng.cost(0, 9), a});
            }
            auto expected = brute_min_cost_flow(net);
            if (!expected) {
                bool threw = false;
                try {
                    min_cost_flow(net);
                } catch (const NoSolutionError&) {
                    threw = true;
                }
                require(threw, "flow should be infeasible");
            } else {
                require(min_cost_flow(net).cost == *expected, "min-cost flow mismatch");
            }
        }
    }
    {
        Rng rng(708);
        for (int trial = 0; trial < 100; ++trial) {
            int ground = static_cast<int>(rng.pick(2, 8));
            FamilySpec f1 = random_matroid_family(rng, ground);
            FamilySpec f2 = random_matroid_family(rng, ground);
            CostVector w = random_vector(rng, ground, -9, 9);
            auto got = min_weight_disjoint_bases(*as_matroid_oracle(f1), *as_matroid_oracle(f2), w);
            auto expected = brute_disjoint_bases(f1, f2, w);
            require(got.has_value() == expected.has_value(), "disjoint-base feasibility mismatch");
            if (got)
                require(got->total_weight == *expected, "disjoint-base weight mismatch: got " +
                                                            got->total_weight.str() + " expected " +
                                                            expected->str());
        }
    }
    {
        Rng rng(709);
        for (int trial = 0; trial < 100; ++trial) {
            int p = static_cast<int>(rng.pick(1, 5));
            CostMatrix costs = random_matrix(rng, p, p, -9, 9);
            AssignmentResult got = hungarian(costs);
            std::vector<int> perm(static_cast<std::size_t>(p));
            for (int i = 0; i < p; ++i) perm[static_cast<std::size_t>(i)] = i;
            Cost best = Cost::infinity();
            do {
                Cost total(0);
                for (int i = 0; i < p; ++i)
                    total += costs[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                best = min(best, total);
            } while (std::next_permutation(perm.begin(), perm.end()));
            require(got.value == best, "assignment value mismatch");
        }
    }
}

// --------------------------------------------------------------------------
// Criterion 8: CLI determinism.

std::string run_command(const std::string& command) {
    std::string output;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    require(pipe != nullptr, "cannot spawn: " + command);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    require(status == 0, "command failed: " + command);
    return output;
}

void criterion_cli_determinism() {
    const char* cli = std::getenv("COPIC_CLI");
    require(cli != nullptr && *cli != '\0', "COPIC_CLI is not set");
    const std::string base = std::string("'") + cli + "'";

    const std::string gen =
        base + " gen --families uniform:2 graphic:complete:3 --m 5 --structure rank:2 --seed 11";
    std::string doc = run_command(gen);
    for (int repeat = 0; repeat < 2; ++repeat)
        require(run_command(gen) == doc, "gen output changed between runs");

    const std::string path = "/tmp/copic_acceptance_instance.json";
    {
        std::ofstream out(path, std::ios::binary);
        out << doc;
    }
    const std::string solve = base + " solve --instance " + path + " --solver auto --verify";
    std::string solved = run_command(solve);
    for (int repeat = 0; repeat < 2; ++repeat)
        require(run_command(solve) == solved, "solve output changed between runs");
    require(solved.find("\"verified\": true") != std::string::npos, "solve did not verify");

    const std::string lincheck = base + " lincheck --instance " + path + " --method both";
    std::string checked = run_command(lincheck);
    require(run_command(lincheck) == checked, "lincheck output changed between runs");

    const std::string diag =
        base + " gen --families stpath:random:4 stpath:random:4 --m 5 --n 5 --structure diagonal "
               "--cost-range 0 9 --seed 3";
    std::string diag_doc = run_command(diag);
    require(run_command(diag) == diag_doc, "diagonal gen output changed between runs");
}

} // namespace

int main() {
    Harness harness;
    harness.criterion(1, "diagonal solvers match the brute-force oracle (6 x 200 instances)",
                      criterion_diagonal);
    harness.criterion(2, "rank-r candidate sets cover the optimum (100 instances)",
                      criterion_rank_coverage);
    harness.criterion(3, "2-approximate oracle keeps the factor-2 bound (30 instances)",
                      criterion_approximation);
    harness.criterion(4, "linearization checks agree and generated instances pass (800 + 100)",
                      criterion_linearization);
    harness.criterion(5, "disjointness milestones (K4, K3, forbidden single edge)",
                      criterion_disjointness);
    harness.criterion(6, "k-card cut sweep equals exhaustive enumeration on K(3,3)", criterion_kcard);
    harness.criterion(7, "kernels match exhaustive oracles (3 x 100 cases)", criterion_kernels);
    harness.criterion(8, "CLI output is byte-identical across runs", criterion_cli_determinism);
    return harness.exit_code();
}
