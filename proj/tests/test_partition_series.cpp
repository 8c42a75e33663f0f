#include <doctest.h>

#include "smirnov/partition.hpp"
#include "smirnov/series.hpp"
#include "smirnov/weight_poly.hpp"

using namespace smirnov;

TEST_CASE("partition counts match the standard sequence") {
    int expected[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (int n = 0; n <= 7; ++n) CHECK(partitions_of(n).size() == expected[n]);
}

TEST_CASE("partitions of 3 in reverse-lex order") {
    auto p = partitions_of(3);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Partition({3}));
    CHECK(p[1] == Partition({2, 1}));
    CHECK(p[2] == Partition({1, 1, 1}));
}

TEST_CASE("partition invariants") {
    Partition p({1, 3, 2, 3});
    CHECK(p.parts() == std::vector<int>{3, 3, 2, 1});
    CHECK(p.size() == 9);
    CHECK_THROWS(Partition({2, 0}));
    // z((2,2,1)) = 2^2 * 2! * 1^1 * 1! = 8
    CHECK(Partition({2, 2, 1}).z_number() == 8);
    CHECK(Partition({3}).z_number() == 3);
    CHECK(Partition({1, 1, 1}).z_number() == 6);
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, -1) == 0);
}

TEST_CASE("series arithmetic against hand-expanded values") {
    // geometric series: 1/(1-x) to order 5
    PowerSeries<mpq_class> one(5, 1), geom(5);
    PowerSeries<mpq_class> denom(5, 1);
    denom[1] = -1;
    geom = one / denom;
    for (int n = 0; n <= 5; ++n) CHECK(geom[n] == 1);
    // (1/(1-x))^2 = sum (n+1) x^n
    PowerSeries<mpq_class> sq = geom * geom;
    for (int n = 0; n <= 5; ++n) CHECK(sq[n] == n + 1);
    // composition: 1/(1-(x+x^2)) counts Fibonacci-type sums
    PowerSeries<mpq_class> g(5);
    g[1] = 1;
    g[2] = 1;
    PowerSeries<mpq_class> fib = geom.compose(g);
    int expect[] = {1, 1, 2, 3, 5, 8};
    for (int n = 0; n <= 5; ++n) CHECK(fib[n] == expect[n]);
    CHECK_THROWS(one / PowerSeries<mpq_class>(5));
    CHECK_THROWS(geom.compose(one));
}
