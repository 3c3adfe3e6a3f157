#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "evciso/exact_matcher.hpp"
#include "test_support.hpp"

using evciso::brute_force_isomorphic;
using evciso::Graph;
using evciso::is_isomorphic;
using evciso::MatchResult;
using evciso::Refinement;
using evciso::verify_mapping;

namespace {

Graph two_triangles() {
    return testsupport::disjoint_union(testsupport::cycle_graph(3),
                                       testsupport::cycle_graph(3));
}

}  // namespace

TEST_CASE("verify_mapping accepts identities and constructions") {
    std::mt19937 rng(50);
    const Graph g = testsupport::random_graph(6, 0.5, rng);
    CHECK(verify_mapping(g, g, {0, 1, 2, 3, 4, 5}));
    const evciso::VertexPermutation p = testsupport::random_permutation(6, rng);
    CHECK(verify_mapping(g, evciso::permute(g, p), p));
}

TEST_CASE("verify_mapping rejects a non-preserving map") {
    const Graph p3(3, {{0, 1}, {1, 2}});
    const Graph other(3, {{0, 1}, {0, 2}});
    CHECK_FALSE(verify_mapping(p3, other, {0, 1, 2}));
}

TEST_CASE("verify_mapping validates its inputs") {
    const Graph g = testsupport::complete_graph(3);
    CHECK_THROWS_AS(verify_mapping(g, testsupport::complete_graph(4), {0, 1, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_mapping(g, g, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_mapping(g, g, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("C6 and C3+C3 are not isomorphic in any mode") {
    const Graph c6 = testsupport::cycle_graph(6);
    for (Refinement mode :
         {Refinement::None, Refinement::Degree, Refinement::EvcClasses}) {
        const MatchResult r = is_isomorphic(c6, two_triangles(), mode);
        CHECK_FALSE(r.isomorphic);
        CHECK_FALSE(r.witness.has_value());
    }
    CHECK_FALSE(brute_force_isomorphic(c6, two_triangles()));
}

TEST_CASE("relabelings are isomorphic with a verifying witness") {
    std::mt19937 rng(60);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        const Graph g = testsupport::random_graph(n, 0.45, rng);
        const Graph h = evciso::permute(g, testsupport::random_permutation(n, rng));
        for (Refinement mode :
             {Refinement::None, Refinement::Degree, Refinement::EvcClasses}) {
            const MatchResult r = is_isomorphic(g, h, mode);
            REQUIRE(r.isomorphic);
            CHECK(verify_mapping(g, h, *r.witness));
        }
    }
}

TEST_CASE("count mismatches return immediately") {
    CHECK_FALSE(is_isomorphic(testsupport::path_graph(4), testsupport::path_graph(5))
                    .isomorphic);
    const MatchResult r =
        is_isomorphic(testsupport::path_graph(4), testsupport::star_graph(3));
    CHECK_FALSE(r.isomorphic);  // same counts, degree labels prune everything
}

TEST_CASE("reflexivity and symmetry") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph a = testsupport::random_graph(7, 0.4, rng);
        const Graph b = testsupport::random_graph(7, 0.4, rng);
        CHECK(is_isomorphic(a, a).isomorphic);
        CHECK(is_isomorphic(a, b).isomorphic == is_isomorphic(b, a).isomorphic);
    }
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_isomorphic(testsupport::complete_graph(3),
                                 testsupport::cycle_graph(3)));
    // C4 versus the "paw of 4 edges": same counts, degree sequences differ.
    const Graph c4 = testsupport::cycle_graph(4);
    const Graph p4_chord(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
    CHECK_FALSE(brute_force_isomorphic(c4, p4_chord));
    CHECK_THROWS_AS(brute_force_isomorphic(testsupport::path_graph(9),
                                           testsupport::path_graph(9)),
                    std::invalid_argument);
}

TEST_CASE("oracle agreement across modes on random pairs") {
    std::mt19937 rng(62);
    std::vector<Graph> graphs;
    for (int k = 0; k < 30; ++k) {
        const int n = 4 + static_cast<int>(rng() % 4);  // up to 7
        graphs.push_back(testsupport::random_graph(n, 0.2 + 0.1 * (k % 6), rng));
    }
    for (size_t i = 0; i < graphs.size(); ++i) {
        for (size_t j = i; j < graphs.size(); ++j) {
            const Graph& a = graphs[i];
            const Graph& b = graphs[j];
            const bool expected =
                a.vertex_count() == b.vertex_count() && brute_force_isomorphic(a, b);
            const MatchResult none = is_isomorphic(a, b, Refinement::None);
            const MatchResult degree = is_isomorphic(a, b, Refinement::Degree);
            const MatchResult evc = is_isomorphic(a, b, Refinement::EvcClasses);
            CHECK(none.isomorphic == expected);
            CHECK(degree.isomorphic == expected);
            CHECK(evc.isomorphic == expected);
            CHECK(evc.nodes_explored <= degree.nodes_explored);
            CHECK(degree.nodes_explored <= none.nodes_explored);
            if (expected) {
                CHECK(verify_mapping(a, b, *none.witness));
                CHECK(verify_mapping(a, b, *degree.witness));
                CHECK(verify_mapping(a, b, *evc.witness));
            }
        }
    }
}

TEST_CASE("refinement prunes the search tree on a relabeled star") {
    const Graph star = testsupport::star_graph(6);
    std::mt19937 rng(63);
    const Graph moved = evciso::permute(star, testsupport::random_permutation(7, rng));
    const MatchResult none = is_isomorphic(star, moved, Refinement::None);
    const MatchResult degree = is_isomorphic(star, moved, Refinement::Degree);
    REQUIRE(none.isomorphic);
    REQUIRE(degree.isomorphic);
    // Degree labels pin the hub immediately; unrefined search may first try
    // mapping the hub onto leaves.
    CHECK(degree.nodes_explored <= none.nodes_explored);
    CHECK(degree.nodes_explored == 7);
}

TEST_CASE("empty graphs are isomorphic with the empty witness") {
    const MatchResult r = is_isomorphic(Graph(0, {}), Graph(0, {}));
    CHECK(r.isomorphic);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->empty());
    CHECK(is_isomorphic(Graph(3, {}), Graph(3, {})).isomorphic);
}
