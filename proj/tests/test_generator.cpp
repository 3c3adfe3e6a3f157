#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "evciso/exact_matcher.hpp"
#include "evciso/generator.hpp"

using evciso::derive_seed;
using evciso::erdos_renyi;
using evciso::Graph;
using evciso::suite;

TEST_CASE("splitmix64 matches the reference stream") {
    // First output of the reference generator seeded with 1234567.
    CHECK(evciso::splitmix64(1234567) == 6457827717110365317ULL);
    CHECK(evciso::splitmix64(0) == 16294208416658607535ULL);
}

TEST_CASE("seed derivation is deterministic and collision-free in range") {
    CHECK(derive_seed(42, 0) == 2949826092126892291ULL);
    CHECK(derive_seed(42, 1) == 6904877152625194467ULL);
    std::set<std::uint64_t> seen;
    for (std::uint64_t k = 0; k < 100000; ++k) seen.insert(derive_seed(42, k));
    CHECK(seen.size() == 100000);
}

TEST_CASE("p=0 yields no edges, p=1 the complete graph") {
    CHECK(erdos_renyi({10, 0.0, 7}).edge_count() == 0);
    const Graph complete = erdos_renyi({10, 1.0, 7});
    CHECK(complete.edge_count() == 45);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) CHECK(complete.has_edge(u, v));
}

TEST_CASE("identical params give identical graphs; different seeds differ") {
    const Graph a = erdos_renyi({12, 0.5, 99});
    const Graph b = erdos_renyi({12, 0.5, 99});
    CHECK(a == b);
    const Graph c = erdos_renyi({12, 0.5, 100});
    CHECK_FALSE(a == c);  // 66 coin flips colliding is astronomically unlikely
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(erdos_renyi({-1, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi({5, -0.1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi({5, 1.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(suite(5, 0.5, -1, 1), std::invalid_argument);
}

TEST_CASE("suites are stable, ordered, and independently seeded") {
    const std::vector<Graph> first = suite(10, 0.5, 3, 42);
    const std::vector<Graph> second = suite(10, 0.5, 3, 42);
    REQUIRE(first.size() == 3);
    for (size_t k = 0; k < 3; ++k) CHECK(first[k] == second[k]);
    CHECK(suite(10, 0.5, 0, 42).empty());

    // Graph k must depend only on (master_seed, k): a longer suite shares
    // its prefix with a shorter one.
    const std::vector<Graph> longer = suite(10, 0.5, 5, 42);
    for (size_t k = 0; k < 3; ++k) CHECK(longer[k] == first[k]);
}

TEST_CASE("p=1 suites are pairwise isomorphic complete graphs") {
    const std::vector<Graph> graphs = suite(10, 1.0, 5, 7);
    REQUIRE(graphs.size() == 5);
    for (const Graph& g : graphs) CHECK(g.edge_count() == 45);
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t j = i + 1; j < graphs.size(); ++j)
            CHECK(evciso::is_isomorphic(graphs[i], graphs[j]).isomorphic);
}

TEST_CASE("edge counts follow Binomial(45, p) within 3 standard errors") {
    const int draws = 1000;
    const double p = 0.5;
    double total = 0.0;
    for (int k = 0; k < draws; ++k)
        total += suite(10, p, 1, 1000 + static_cast<std::uint64_t>(k))[0].edge_count();
    const double mean = total / draws;
    const double expected = 45.0 * p;
    const double se = std::sqrt(45.0 * p * (1.0 - p)) / std::sqrt(double(draws));
    CHECK(std::abs(mean - expected) <= 3.0 * se);
}
