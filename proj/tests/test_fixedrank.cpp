#include <doctest.h>

#include "copic/bruteforce.hpp"
#include "copic/errors.hpp"
#include "copic/fixedrank.hpp"
#include "support/test_support.hpp"

using namespace copic;
using namespace copic::testsupport;

namespace {

CostMatrix random_rank_matrix(Rng& rng, int m, int n, int r) {
    CostMatrix q(static_cast<std::size_t>(m), CostVector(static_cast<std::size_t>(n), Cost(0)));
    for (int p = 0; p < r; ++p) {
        CostVector a = random_vector(rng, m, -4, 4);
        CostVector b = random_vector(rng, n, -4, 4);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return q;
}

bool candidate_present(const CandidateSet& candidates, const IndexSet& x) {
    for (const IndexSet& c : candidates.candidates)
        if (c == x) return true;
    return false;
}

} // namespace

TEST_CASE("factorize recovers rank and reconstructs exactly") {
    CostMatrix q = {{Cost(2), Cost(3)}, {Cost(-2), Cost(-3)}};
    RankFactorization fact = factorize(q);
    CHECK(fact.r == 1);
    CHECK(reconstructs(fact, q));

    CHECK(factorize(CostMatrix(3, CostVector(4, Cost(0)))).r == 0);

    CostMatrix identity(3, CostVector(3, Cost(0)));
    for (int i = 0; i < 3; ++i) identity[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Cost(1);
    CHECK(factorize(identity).r == 3);

    Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        int m = static_cast<int>(rng.pick(1, 6)), n = static_cast<int>(rng.pick(1, 6));
        int r = static_cast<int>(rng.pick(0, 3));
        CostMatrix random_q = random_rank_matrix(rng, m, n, r);
        RankFactorization f = factorize(random_q);
        CHECK(f.r <= r);
        CHECK(reconstructs(f, random_q));
    }
}

TEST_CASE("rank1 sweep worked example") {
    Instance inst = make_instance(FamilySpec::unconstrained(2), FamilySpec::uniform(2, 1),
                                  {{Cost(2), Cost(3)}, {Cost(-2), Cost(-3)}}, {Cost(0), Cost(0)},
                                  {Cost(0), Cost(0)});
    RankFactorization fact = factorize(inst.q);
    REQUIRE(fact.r == 1);
    Solution s = solve_rank1_unconstrained_side(inst, fact);
    CHECK(s.objective == Cost(-3));
    CHECK(s.objective == solve_bruteforce(inst).objective);
}

TEST_CASE("rank1 sweep with a degenerate zero factor decouples the sides") {
    Instance inst = make_instance(FamilySpec::unconstrained(3), FamilySpec::uniform(2, 1),
                                  CostMatrix(3, CostVector(2, Cost(0))), {Cost(-1), Cost(2), Cost(-3)},
                                  {Cost(5), Cost(1)});
    RankFactorization degenerate;
    degenerate.r = 1;
    degenerate.a_vectors = {CostVector(3, Cost(0))};
    degenerate.b_vectors = {CostVector{Cost(1), Cost(2)}};
    Solution s = solve_rank1_unconstrained_side(inst, degenerate);
    CHECK(s.s1 == IndexSet{0, 2});
    CHECK(s.s2 == IndexSet{1});
    CHECK(s.objective == Cost(-3));
}

TEST_CASE("nonnegative data admits the empty first side") {
    Instance inst = make_instance(FamilySpec::unconstrained(2), FamilySpec::uniform(2, 1),
                                  {{Cost(1), Cost(2)}, {Cost(2), Cost(4)}}, {Cost(1), Cost(1)},
                                  {Cost(0), Cost(3)});
    RankFactorization fact = factorize(inst.q);
    CandidateSet candidates = rank1_candidates(inst.c, fact);
    CHECK(candidate_present(candidates, {}));
    Solution s = solve_rank1_unconstrained_side(inst, fact);
    CHECK(s.s1.empty());
    CHECK(s.objective == Cost(0));
}

TEST_CASE("factorization must match the instance matrix") {
    Instance inst = make_instance(FamilySpec::unconstrained(2), FamilySpec::uniform(2, 1),
                                  {{Cost(1), Cost(0)}, {Cost(0), Cost(1)}}, {Cost(0), Cost(0)},
                                  {Cost(0), Cost(0)});
    RankFactorization wrong;
    wrong.r = 1;
    wrong.a_vectors = {CostVector{Cost(1), Cost(0)}};
    wrong.b_vectors = {CostVector{Cost(1), Cost(0)}};
    CHECK_THROWS_AS(solve_rank1_unconstrained_side(inst, wrong), DomainError);
}

TEST_CASE("rank-r equals rank-1 on rank-one instances") {
    Rng rng(66);
    for (int trial = 0; trial < 25; ++trial) {
        int m = static_cast<int>(rng.pick(2, 6)), n = static_cast<int>(rng.pick(1, 4));
        CostMatrix q = random_rank_matrix(rng, m, n, 1);
        RankFactorization fact = factorize(q);
        if (fact.r != 1) continue;
        Instance inst = make_instance(FamilySpec::unconstrained(m), FamilySpec::uniform(n, std::max(1, n / 2)),
                                      q, random_vector(rng, m, -9, 9), random_vector(rng, n, -9, 9));
        CHECK(solve_rank1_unconstrained_side(inst, fact).objective ==
              solve_rankr_unconstrained_side(inst, fact).objective);
    }
}

TEST_CASE("rank zero emits the sign-of-c candidate") {
    Instance inst = make_instance(FamilySpec::unconstrained(3), FamilySpec::uniform(2, 1),
                                  CostMatrix(3, CostVector(2, Cost(0))), {Cost(-1), Cost(3), Cost(-2)},
                                  {Cost(4), Cost(2)});
    RankFactorization fact = factorize(inst.q);
    REQUIRE(fact.r == 0);
    CandidateSet candidates = rankr_candidates(inst.c, fact, inst.m);
    CHECK(candidate_present(candidates, {0, 2}));
    Solution s = solve_rankr_unconstrained_side(inst, fact);
    CHECK(s.objective == Cost(-1)); // -1 - 2 + 2
}

TEST_CASE("rank-r matches brute force and covers the optimal support") {
    Rng rng(88);
    int done = 0;
    while (done < 30) {
        int m = static_cast<int>(rng.pick(2, 7));
        int r = static_cast<int>(rng.pick(1, 3));
        CostMatrix q = random_rank_matrix(rng, m, 3, r);
        FamilySpec f2 = rng.chance(50) ? FamilySpec::uniform(3, 1) : FamilySpec::unconstrained(3);
        Instance inst = make_instance(FamilySpec::unconstrained(m), f2, q,
                                      random_vector(rng, m, -9, 9), random_vector(rng, 3, -9, 9));
        RankFactorization fact = factorize(q);
        Solution expected = solve_bruteforce(inst);
        Solution got = solve_rankr_unconstrained_side(inst, fact);
        CHECK(got.objective == expected.objective);
        CandidateSet candidates = rankr_candidates(inst.c, fact, inst.m);
        CHECK(candidate_present(candidates, expected.s1));
        ++done;
    }
}

TEST_CASE("zero reduced costs branch into both bound assignments") {
    // c parallel to the factor row creates degenerate reduced costs; the
    // branching must still cover the brute-force optimum.
    Instance inst = make_instance(FamilySpec::unconstrained(3), FamilySpec::uniform(2, 1),
                                  {{Cost(1), Cost(-1)}, {Cost(-1), Cost(1)}, {Cost(1), Cost(-1)}},
                                  {Cost(1), Cost(-1), Cost(1)}, {Cost(0), Cost(0)});
    RankFactorization fact = factorize(inst.q);
    REQUIRE(fact.r == 1);
    Solution expected = solve_bruteforce(inst);
    CHECK(solve_rankr_unconstrained_side(inst, fact).objective == expected.objective);
    CHECK(solve_rank1_unconstrained_side(inst, fact).objective == expected.objective);
    CandidateSet candidates = rankr_candidates(inst.c, fact, inst.m);
    CHECK(candidate_present(candidates, expected.s1));

    Rng rng(444);
    for (int trial = 0; trial < 20; ++trial) {
        // Small coefficient ranges make ties frequent.
        CostMatrix q = random_rank_matrix(rng, 5, 3, 1);
        RankFactorization f = factorize(q);
        Instance degenerate = make_instance(FamilySpec::unconstrained(5), FamilySpec::uniform(3, 1), q,
                                            random_vector(rng, 5, -1, 1), random_vector(rng, 3, -1, 1));
        Solution brute = solve_bruteforce(degenerate);
        CHECK(solve_rankr_unconstrained_side(degenerate, f).objective == brute.objective);
        CHECK(candidate_present(rankr_candidates(degenerate.c, f, 5), brute.s1));
    }
}

TEST_CASE("candidate generation respects the cap") {
    Rng rng(13);
    CostMatrix q = random_rank_matrix(rng, 8, 4, 3);
    RankFactorization fact = factorize(q);
    CostVector c = random_vector(rng, 8, -9, 9);
    CHECK_THROWS_AS(rankr_candidates(c, fact, 8, 4), ResourceError);
}

TEST_CASE("scaling a factor pair leaves the objective unchanged") {
    Rng rng(27);
    for (int trial = 0; trial < 10; ++trial) {
        CostMatrix q = random_rank_matrix(rng, 4, 3, 1);
        RankFactorization fact = factorize(q);
        if (fact.r != 1) continue;
        Instance inst = make_instance(FamilySpec::unconstrained(4), FamilySpec::uniform(3, 2), q,
                                      random_vector(rng, 4, -5, 5), random_vector(rng, 3, -5, 5));
        Cost base = solve_rank1_unconstrained_side(inst, fact).objective;
        RankFactorization scaled = fact;
        Cost t = Cost::from_fraction(3, 2);
        for (auto& v : scaled.a_vectors[0]) v *= t;
        for (auto& v : scaled.b_vectors[0]) v /= t;
        CHECK(solve_rank1_unconstrained_side(inst, scaled).objective == base);
    }
}

TEST_CASE("approximate oracle path") {
    Rng rng(202);
    ApproximateLcopOracle exact;
    exact.alpha = Cost(1);
    exact.solve = [](const FamilySpec& family, const CostVector& w) { return lcop_solve(family, w); };

    // alpha = 2 stub: greedy reversed pick, falling back to the optimum when
    // the greedy set would break the factor-two contract.
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
    while (done < 15) {
        int m = static_cast<int>(rng.pick(2, 5));
        CostMatrix q = random_rank_matrix(rng, m, 4, 1);
        bool nonnegative = true;
        for (const auto& row : q)
            for (const Cost& v : row)
                if (v.is_negative()) nonnegative = false;
        if (!nonnegative) {
            // Re-roll via fresh randomness below.
            q = CostMatrix(static_cast<std::size_t>(m), CostVector(4, Cost(0)));
        }
        Instance inst = make_instance(FamilySpec::unconstrained(m), FamilySpec::uniform(4, 2), q,
                                      random_vector(rng, m, 0, 9), random_vector(rng, 4, 0, 9));
        RankFactorization fact = factorize(q);

        Solution exact_solution = solve_rankr_with_approximate_oracle(inst, fact, exact);
        CHECK(exact_solution.objective == solve_bruteforce(inst).objective);

        Solution approx = solve_rankr_with_approximate_oracle(inst, fact, stub);
        CHECK(approx.objective <= Cost(2) * solve_bruteforce(inst).objective);
        ++done;
    }
}

TEST_CASE("zero interactions with nonnegative costs give a zero-cost pair") {
    ApproximateLcopOracle oracle;
    oracle.alpha = Cost(2);
    oracle.solve = [](const FamilySpec& family, const CostVector& w) { return lcop_solve(family, w); };
    Instance inst = make_instance(FamilySpec::unconstrained(3), FamilySpec::unconstrained(3),
                                  CostMatrix(3, CostVector(3, Cost(0))), {Cost(1), Cost(0), Cost(2)},
                                  {Cost(3), Cost(0), Cost(1)});
    RankFactorization fact = factorize(inst.q);
    Solution s = solve_rankr_with_approximate_oracle(inst, fact, oracle);
    CHECK(s.objective == Cost(0));
}

TEST_CASE("approximate oracle rejects negative induced weights") {
    ApproximateLcopOracle oracle;
    oracle.alpha = Cost(2);
    oracle.solve = [](const FamilySpec& family, const CostVector& w) { return lcop_solve(family, w); };
    Instance inst = make_instance(FamilySpec::unconstrained(1), FamilySpec::uniform(1, 1),
                                  {{Cost(0)}}, {Cost(0)}, {Cost(-1)});
    RankFactorization fact = factorize(inst.q);
    CHECK_THROWS_AS(solve_rankr_with_approximate_oracle(inst, fact, oracle), ContractViolationError);
}
