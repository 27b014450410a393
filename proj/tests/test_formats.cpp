#include <doctest.h>

#include "copic/bruteforce.hpp"
#include "copic/dispatch.hpp"
#include "copic/errors.hpp"
#include "copic/fixedrank.hpp"
#include "copic/generate.hpp"
#include "copic/jsonio.hpp"
#include "copic/linearize.hpp"
#include "support/test_support.hpp"

using namespace copic;
using namespace copic::testsupport;

TEST_CASE("instance documents round-trip through parse and emit") {
    GenOptions options;
    options.seed = 3;
    struct Config {
        const char* f1;
        const char* f2;
        int m;
        int n;
    };
    const Config configs[] = {
        {"unconstrained", "uniform:2", 4, 4},
        {"uniform:1", "graphic:complete:3", 4, -1},
        {"partition:2.1,2.1", "pm:2", -1, -1},
        {"stpath:random:4", "unconstrained", 4, 4},
        {"stpath:random:4:directed", "uniform:2", 4, 4},
    };
    for (const Config& spec : configs) {
        options.family1 = spec.f1;
        options.family2 = spec.f2;
        options.m = spec.m;
        options.n = spec.n;
        std::string text = generate_instance_json(options);
        ParsedInstance parsed = parse_instance_json(text);
        CHECK(validate_instance(parsed.instance).empty());
        CHECK(emit_instance_json(parsed.instance, parsed.diag) == text);
    }
}

TEST_CASE("cost strings keep exact values through documents") {
    Instance inst = make_instance(FamilySpec::unconstrained(1), FamilySpec::unconstrained(2),
                                  {{Cost::parse("-3.5"), Cost::infinity()}}, {Cost::parse("1/3")},
                                  {Cost(0), Cost::parse("0.125")});
    std::string text = emit_instance_json(inst);
    ParsedInstance parsed = parse_instance_json(text);
    CHECK(parsed.instance.q[0][0] == Cost::from_fraction(-7, 2));
    CHECK(parsed.instance.q[0][1].is_infinite());
    CHECK(parsed.instance.c[0] == Cost::from_fraction(1, 3));
    CHECK(parsed.instance.d[1] == Cost::from_fraction(1, 8));
}

TEST_CASE("malformed documents are rejected with messages") {
    CHECK_THROWS_AS(parse_instance_json("{"), DomainError);
    CHECK_THROWS_AS(parse_instance_json("{}"), DomainError);
    CHECK_THROWS_AS(parse_instance_json(R"({"m":1,"n":1,"family1":{"kind":"nope"},
        "family2":{"kind":"unconstrained"},"q":{"dense":[["0"]]},"c":["0"],"d":["0"]})"),
                    DomainError);
    // c has the wrong length.
    CHECK_THROWS_AS(parse_instance_json(R"({"m":1,"n":1,"family1":{"kind":"unconstrained"},
        "family2":{"kind":"unconstrained"},"q":{"dense":[["0"]]},"c":["0","1"],"d":["0"]})"),
                    DomainError);
    // inf outside Q.
    CHECK_THROWS_AS(parse_instance_json(R"({"m":1,"n":1,"family1":{"kind":"unconstrained"},
        "family2":{"kind":"unconstrained"},"q":{"dense":[["0"]]},"c":["inf"],"d":["0"]})"),
                    DomainError);
}

TEST_CASE("generator structures honor their contracts") {
    GenOptions options;
    options.family1 = "unconstrained";
    options.family2 = "uniform:2";
    options.m = 4;
    options.n = 5;

    options.structure = "rank:2";
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        options.seed = seed;
        ParsedInstance parsed = parse_instance_json(generate_instance_json(options));
        CHECK(factorize(parsed.instance.q).r <= 2);
    }

    options.family1 = "uniform:1";
    options.m = 5;
    options.structure = "diagonal";
    options.seed = 9;
    std::string text = generate_instance_json(options);
    CHECK(text.find("\"diag\"") != std::string::npos);
    ParsedInstance parsed = parse_instance_json(text);
    REQUIRE(parsed.diag.has_value());
    CHECK(try_diagonal_view(parsed.instance).has_value());

    options.structure = "nonsense";
    CHECK_THROWS_AS(generate_instance_json(options), DomainError);
}

TEST_CASE("generated linearizable instances are accepted") {
    GenOptions options;
    options.structure = "linearizable";
    struct Config {
        const char* f1;
        const char* f2;
        int m;
        int n;
    };
    const Config configs[] = {
        {"uniform:2", "uniform:1", 4, 3},
        {"graphic:complete:3", "uniform:2", -1, 4},
        {"pm:2", "graphic:complete:3", -1, -1},
        {"unconstrained", "uniform:2", 3, 4},
        {"stpath:random:4:directed", "uniform:1", 5, 3},
    };
    for (const Config& config : configs) {
        options.family1 = config.f1;
        options.family2 = config.f2;
        options.m = config.m;
        options.n = config.n;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            options.seed = seed;
            ParsedInstance parsed = parse_instance_json(generate_instance_json(options));
            CHECK(linearizable_bruteforce(parsed.instance).linearizable);
        }
    }
}

TEST_CASE("k-card documents parse") {
    KCardCutInstance inst = parse_kcard_json(R"({"m":2,"n":2,"k":3,
        "q":[["1","2"],["3","4.5"]]})");
    CHECK(inst.k == 3);
    CHECK(inst.q[1][1] == Cost::from_fraction(9, 2));
    CHECK_THROWS_AS(parse_kcard_json(R"({"m":2,"n":2,"k":1,"q":[["1","inf"],["3","4"]]})"),
                    DomainError);
}

TEST_CASE("auto dispatch picks the most specific solver") {
    // Diagonal with both sides unconstrained.
    Rng rng(1001);
    DiagonalInstance diag = make_diagonal(FamilySpec::unconstrained(3), FamilySpec::unconstrained(3),
                                          random_vector(rng, 3, -9, 9), random_vector(rng, 3, -9, 9),
                                          random_vector(rng, 3, -9, 9));
    DispatchResult r = solve_auto(to_instance(diag));
    CHECK(r.solver == "diag-unconstrained");

    diag.family1 = FamilySpec::uniform(3, 2);
    r = solve_auto(to_instance(diag));
    CHECK(r.solver == "diag-one-side");

    diag.family2 = FamilySpec::uniform(3, 1);
    r = solve_auto(to_instance(diag));
    CHECK(r.solver == "diag-uniform");

    // Rank-1 interaction with an unconstrained side.
    Instance rank1 = make_instance(FamilySpec::unconstrained(2), FamilySpec::uniform(3, 1),
                                   {{Cost(1), Cost(2), Cost(3)}, {Cost(2), Cost(4), Cost(6)}},
                                   {Cost(0), Cost(0)}, {Cost(1), Cost(0), Cost(2)});
    r = solve_auto(rank1);
    CHECK(r.solver == "rank1");
    CHECK(r.solution.objective == solve_bruteforce(rank1).objective);
    CHECK_FALSE(r.rejections.empty());

    // No unconstrained side and non-diagonal Q: falls through to side-enum.
    Instance general = make_instance(FamilySpec::uniform(2, 1), FamilySpec::uniform(2, 1),
                                     {{Cost(1), Cost(2)}, {Cost(7), Cost(1)}}, {Cost(0), Cost(0)},
                                     {Cost(0), Cost(0)});
    r = solve_auto(general);
    CHECK(r.solver == "side-enum");
    CHECK(r.solution.objective == solve_bruteforce(general).objective);
}

TEST_CASE("named dispatch enforces preconditions") {
    Instance inst = make_instance(FamilySpec::uniform(2, 1), FamilySpec::uniform(2, 1),
                                  {{Cost(-3), Cost(0)}, {Cost(0), Cost(0)}}, {Cost(0), Cost(0)},
                                  {Cost(0), Cost(0)});
    CHECK_THROWS_WITH_AS(solve_named(inst, "diag-matroid"), "diag-matroid requires a >= 0",
                         PreconditionError);
    CHECK_THROWS_AS(solve_named(inst, "rank1"), PreconditionError);
    CHECK_THROWS_AS(solve_named(inst, "unknown-solver"), DomainError);
    CHECK(solve_named(inst, "diag-uniform").objective == solve_bruteforce(inst).objective);
}

TEST_CASE("auto dispatch agrees with brute force on mixed random instances") {
    Rng rng(2002);
    for (int trial = 0; trial < 30; ++trial) {
        int m = static_cast<int>(rng.pick(1, 4));
        int n = static_cast<int>(rng.pick(1, 4));
        FamilySpec f1 = rng.chance(50) ? FamilySpec::unconstrained(m)
                                       : FamilySpec::uniform(m, static_cast<int>(rng.pick(0, m)));
        FamilySpec f2 = rng.chance(50) ? FamilySpec::unconstrained(n)
                                       : FamilySpec::uniform(n, static_cast<int>(rng.pick(0, n)));
        Instance inst = make_instance(f1, f2, random_matrix(rng, m, n, -5, 5),
                                      random_vector(rng, m, -5, 5), random_vector(rng, n, -5, 5));
        DispatchResult r = solve_auto(inst);
        CHECK(r.solution.objective == solve_bruteforce(inst).objective);
    }
}
