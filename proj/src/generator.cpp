#include "evciso/generator.hpp"

#include <random>
#include <stdexcept>

namespace evciso {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
}

Graph erdos_renyi(const GeneratorParams& params) {
    if (params.n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    if (!(params.p_link >= 0.0 && params.p_link <= 1.0))
        throw std::invalid_argument("p_link must be in [0, 1]");

    std::mt19937_64 rng(params.seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < params.n; ++u) {
        for (int v = u + 1; v < params.n; ++v) {
            const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
            if (r < params.p_link) edges.emplace_back(u, v);
        }
    }
    return Graph(params.n, std::move(edges));
}

std::vector<Graph> suite(int n, double p_link, int count, std::uint64_t master_seed) {
    if (count < 0) throw std::invalid_argument("suite count must be non-negative");
    std::vector<Graph> graphs;
    graphs.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k)
        graphs.push_back(erdos_renyi(
            {n, p_link, derive_seed(master_seed, static_cast<std::uint64_t>(k))}));
    return graphs;
}

}  // namespace evciso
