#pragma once

#include <cstdint>
#include <vector>

#include "evciso/graph.hpp"

namespace evciso {

struct GeneratorParams {
    int n = 0;
    double p_link = 0.0;  // in [0, 1]
    std::uint64_t seed = 0;
};

/// SplitMix64 finalizer: the stated mix for deriving per-graph seeds.
/// derive_seed(master, k) = splitmix64(master ^ ((k+1) * 0x9E3779B97F4A7C15)).
/// Every step is a bijection on 64-bit words, so distinct indices under the
/// same master seed always yield distinct seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// G(n, p): every unordered pair (u, v), visited in lexicographic order with
/// u < v, draws one uniform value in [0, 1) and becomes an edge iff the value
/// is strictly below p_link. The draw is (rng() >> 11) * 2^-53 from a
/// mt19937_64 seeded with params.seed, so identical params give identical
/// graphs, p=0 is empty and p=1 is complete.
Graph erdos_renyi(const GeneratorParams& params);

/// `count` graphs where graph k uses derive_seed(master_seed, k). Graphs are
/// mutually independent, so a suite can be generated concurrently; order is
/// by index.
std::vector<Graph> suite(int n, double p_link, int count, std::uint64_t master_seed);

}  // namespace evciso
