#include <doctest.h>

#include "copic/cost.hpp"
#include "copic/errors.hpp"
#include "support/test_support.hpp"

using namespace copic;

TEST_CASE("parsing decimal, fraction and inf strings") {
    CHECK(Cost::parse("2") == Cost(2));
    CHECK(Cost::parse("-3.5") == Cost::from_fraction(-7, 2));
    CHECK(Cost::parse("0.1") == Cost::from_fraction(1, 10));
    CHECK(Cost::parse("7/2") == Cost::from_fraction(7, 2));
    CHECK(Cost::parse("-4/6") == Cost::from_fraction(-2, 3));
    CHECK(Cost::parse(" 12 ") == Cost(12));
    CHECK(Cost::parse("inf").is_infinite());
    CHECK(Cost::parse("+inf").is_infinite());
    CHECK_THROWS_AS(Cost::parse("-inf"), DomainError);
    CHECK_THROWS_AS(Cost::parse(""), DomainError);
    CHECK_THROWS_AS(Cost::parse("abc"), DomainError);
    CHECK_THROWS_AS(Cost::parse("1.2.3"), DomainError);
    CHECK_THROWS_AS(Cost::parse("1/0"), DomainError);
}

TEST_CASE("finite arithmetic is exact") {
    Cost tenth = Cost::parse("0.1");
    Cost sum;
    for (int i = 0; i < 10; ++i) sum += tenth;
    CHECK(sum == Cost(1));
    CHECK(Cost::parse("0.1") + Cost::parse("0.2") == Cost::parse("0.3"));
    CHECK(Cost::from_fraction(1, 3) * Cost(3) == Cost(1));
    CHECK(Cost::from_fraction(1, 3) / Cost::from_fraction(1, 3) == Cost(1));
    CHECK(-Cost::from_fraction(2, 4) == Cost::parse("-0.5"));
}

TEST_CASE("infinity absorbs addition and dominates comparisons") {
    Cost inf = Cost::infinity();
    CHECK((inf + Cost(5)).is_infinite());
    CHECK((Cost(5) + inf).is_infinite());
    CHECK((inf - Cost(100)).is_infinite());
    CHECK(inf > Cost(1000000));
    CHECK(Cost(0) < inf);
    CHECK(inf == Cost::infinity());
    CHECK_FALSE(inf < Cost::infinity());
    CHECK((inf * Cost(3)).is_infinite());
}

TEST_CASE("operations that would create a signed infinity throw") {
    Cost inf = Cost::infinity();
    CHECK_THROWS_AS(-inf, DomainError);
    CHECK_THROWS_AS(Cost(1) - inf, DomainError);
    CHECK_THROWS_AS(inf * Cost(-1), DomainError);
    CHECK_THROWS_AS(inf * Cost(0), DomainError);
    CHECK_THROWS_AS(inf / Cost(2), DomainError);
    CHECK_THROWS_AS(inf.rational(), DomainError);
}

TEST_CASE("string rendering round-trips exactly") {
    CHECK(Cost(7).str() == "7");
    CHECK(Cost(-7).str() == "-7");
    CHECK(Cost::parse("-3.5").str() == "-3.5");
    CHECK(Cost::from_fraction(1, 8).str() == "0.125");
    CHECK(Cost::from_fraction(-1, 20).str() == "-0.05");
    CHECK(Cost::from_fraction(1, 3).str() == "1/3");
    CHECK(Cost::infinity().str() == "inf");

    testsupport::Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        Cost value = Cost::from_fraction(rng.pick(-500, 500), rng.pick(1, 40));
        CHECK(Cost::parse(value.str()) == value);
    }
}

TEST_CASE("integer inputs keep denominator one") {
    testsupport::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Cost a = rng.cost(-50, 50), b = rng.cost(-50, 50), c = rng.cost(-50, 50);
        Cost value = a * b + c - a;
        CHECK(value.rational().get_den() == 1);
    }
}
