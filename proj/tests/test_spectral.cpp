#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "evciso/spectral.hpp"
#include "test_support.hpp"

using evciso::ConvergenceConfig;
using evciso::ConvergenceError;
using evciso::EvcResult;
using evciso::Graph;
using evciso::power_iteration;

namespace {

double l2_norm(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

void check_result_invariants(const Graph& g, const EvcResult& r) {
    REQUIRE(r.values.size() == static_cast<size_t>(g.vertex_count()));
    for (double x : r.values) CHECK(x >= 0.0);
    CHECK(l2_norm(r.values) == doctest::Approx(1.0).epsilon(1e-9));
    const double avg_degree = 2.0 * g.edge_count() / g.vertex_count();
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    CHECK(r.spectral_radius >= avg_degree - 1e-9);
    CHECK(r.spectral_radius <= max_degree + 1e-9);
    CHECK(r.iterations >= 1);
}

}  // namespace

TEST_CASE("config defaults") {
    const ConvergenceConfig cfg;
    CHECK(cfg.norm_tolerance == 1e-10);
    CHECK(cfg.vector_tolerance == 1e-10);
    CHECK(cfg.max_iterations == 1000);
}

TEST_CASE("K4 fixture: uniform values, spectral radius 3") {
    const EvcResult r = power_iteration(testsupport::complete_graph(4));
    check_result_invariants(testsupport::complete_graph(4), r);
    for (double x : r.values) CHECK(x == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(r.spectral_radius == doctest::Approx(3.0).epsilon(1e-6));
    CHECK_FALSE(r.used_shift);  // uniform start is already the Perron vector
}

TEST_CASE("P3 fixture: center-heavy Perron vector, radius sqrt(2)") {
    const Graph p3(3, {{0, 1}, {1, 2}});
    const EvcResult r = power_iteration(p3);
    check_result_invariants(p3, r);
    CHECK(r.values[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(r.values[1] == doctest::Approx(0.7071067811865476).epsilon(1e-6));
    CHECK(r.values[2] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(r.spectral_radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    CHECK(evciso::evc_sequence(r)[0] == doctest::Approx(0.7071067811865476));
}

TEST_CASE("star K{1,4} fixture: radius 2, hub/leaf split") {
    const Graph star = testsupport::star_graph(4);
    const EvcResult r = power_iteration(star);
    check_result_invariants(star, r);
    CHECK(r.values[0] == doctest::Approx(0.7071067811865476).epsilon(1e-6));
    for (int leaf = 1; leaf <= 4; ++leaf)
        CHECK(r.values[leaf] == doctest::Approx(0.35355339059327373).epsilon(1e-6));
    CHECK(r.spectral_radius == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(r.used_shift);  // stars are bipartite; the iterate oscillates
}

TEST_CASE("C5 fixture: uniform values, radius 2") {
    const Graph c5 = testsupport::cycle_graph(5);
    const EvcResult r = power_iteration(c5);
    check_result_invariants(c5, r);
    for (double x : r.values)
        CHECK(x == doctest::Approx(0.4472135954999579).epsilon(1e-6));
    CHECK(r.spectral_radius == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("regular graphs have the uniform Perron vector") {
    for (const Graph& g : {testsupport::cycle_graph(6), testsupport::complete_graph(3),
                           testsupport::complete_graph(7)}) {
        const EvcResult r = power_iteration(g);
        const double expected = 1.0 / std::sqrt(g.vertex_count());
        for (double x : r.values) CHECK(x == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("edgeless graph is an error") {
    CHECK_THROWS_WITH_AS(power_iteration(Graph(5, {})), doctest::Contains("edgeless"),
                         ConvergenceError);
}

TEST_CASE("invalid configuration is rejected") {
    ConvergenceConfig cfg;
    cfg.norm_tolerance = 0.0;
    CHECK_THROWS_AS(power_iteration(testsupport::complete_graph(3), cfg),
                    std::invalid_argument);
    cfg = ConvergenceConfig{};
    cfg.max_iterations = 0;
    CHECK_THROWS_AS(power_iteration(testsupport::complete_graph(3), cfg),
                    std::invalid_argument);
}

TEST_CASE("iteration cap is honored") {
    ConvergenceConfig cfg;
    cfg.max_iterations = 2;
    cfg.norm_tolerance = 1e-15;
    cfg.vector_tolerance = 1e-15;
    CHECK_THROWS_AS(power_iteration(testsupport::path_graph(4), cfg), ConvergenceError);
}

TEST_CASE("evc_sequence sorts non-increasing without changing the multiset") {
    const EvcResult r = power_iteration(testsupport::star_graph(4));
    const std::vector<double> seq = evciso::evc_sequence(r);
    CHECK(std::is_sorted(seq.begin(), seq.end(), std::greater<>()));
    std::vector<double> values = r.values;
    std::sort(values.begin(), values.end(), std::greater<>());
    CHECK(seq == values);
}

TEST_CASE("permutation equivariance: same iterations, mapped values") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 8);
        Graph g = testsupport::random_graph(n, 0.4, rng);
        if (g.edge_count() == 0) continue;
        const evciso::VertexPermutation p = testsupport::random_permutation(n, rng);
        const EvcResult base = power_iteration(g);
        const EvcResult moved = power_iteration(evciso::permute(g, p));
        CHECK(moved.iterations == base.iterations);
        CHECK(moved.used_shift == base.used_shift);
        for (int v = 0; v < n; ++v)
            CHECK(moved.values[p[v]] == doctest::Approx(base.values[v]).epsilon(1e-9));
        const std::vector<double> a = evciso::evc_sequence(base);
        const std::vector<double> b = evciso::evc_sequence(moved);
        for (int v = 0; v < n; ++v)
            CHECK(a[v] == doctest::Approx(b[v]).epsilon(1e-9));
    }
}

TEST_CASE("dense eigensolver oracle sweep over random connected graphs") {
    std::mt19937 rng(2024);
    int bipartite_shifts = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);  // up to 12
        const double p = 0.25 + 0.5 * (trial % 4) / 4.0;
        const Graph g = testsupport::random_connected_graph(n, p, rng);
        const EvcResult r = power_iteration(g);
        check_result_invariants(g, r);
        if (r.used_shift) ++bipartite_shifts;
        const testsupport::OracleSpectral oracle = testsupport::dense_oracle(g);
        CHECK(r.spectral_radius ==
              doctest::Approx(oracle.spectral_radius).epsilon(1e-6));
        const std::vector<double> seq = evciso::evc_sequence(r);
        REQUIRE(seq.size() == oracle.sorted_evc.size());
        for (size_t i = 0; i < seq.size(); ++i)
            CHECK(seq[i] == doctest::Approx(oracle.sorted_evc[i]).epsilon(1e-6));
    }
    CHECK(bipartite_shifts > 0);  // the sweep exercises the shift fallback
}

TEST_CASE("trees exercise the bipartite shift and still match the oracle") {
    const Graph p4 = testsupport::path_graph(4);
    const EvcResult r = power_iteration(p4);
    CHECK(r.used_shift);
    const testsupport::OracleSpectral oracle = testsupport::dense_oracle(p4);
    CHECK(r.spectral_radius == doctest::Approx(oracle.spectral_radius).epsilon(1e-6));
    CHECK(r.spectral_radius ==
          doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-6));
}
