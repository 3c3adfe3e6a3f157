#include "evciso/exact_matcher.hpp"

#include <algorithm>
#include <numeric>

namespace evciso {

namespace {

bool preserves_edges(const Graph& g1, const Graph& g2, const VertexPermutation& f) {
    if (g1.edge_count() != g2.edge_count()) return false;
    // Equal edge counts plus a bijective vertex map make "every g1 edge maps
    // to a g2 edge" equivalent to the full iff.
    for (auto [u, v] : g1.edges())
        if (!g2.has_edge(f[static_cast<size_t>(u)], f[static_cast<size_t>(v)]))
            return false;
    return true;
}

// Backtracking core. Candidate images for a g1 vertex are the unused g2
// vertices with an equal constraint label; labels encode the refinement
// (uniform, degree, or degree+EVC-class). Assignment order is g1 vertices by
// degree descending, ties by ascending id; candidates are tried in ascending
// id. Each tentative assignment is checked against all previously assigned
// vertices for edge/non-edge agreement.
MatchResult search(const Graph& g1, const Graph& g2, const std::vector<long>& label1,
                   const std::vector<long>& label2) {
    const int n = g1.vertex_count();
    MatchResult result;

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g1.degree(a) != g1.degree(b)) return g1.degree(a) > g1.degree(b);
        return a < b;
    });

    const std::vector<std::uint8_t> adj1 = g1.adjacency_matrix();
    const std::vector<std::uint8_t> adj2 = g2.adjacency_matrix();
    std::vector<int> image(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int u = order[static_cast<size_t>(depth)];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<size_t>(w)]) continue;
            if (label1[static_cast<size_t>(u)] != label2[static_cast<size_t>(w)]) continue;
            bool consistent = true;
            for (int d = 0; d < depth; ++d) {
                const int u2 = order[static_cast<size_t>(d)];
                const int w2 = image[static_cast<size_t>(u2)];
                if (adj1[static_cast<size_t>(u) * n + u2] !=
                    adj2[static_cast<size_t>(w) * n + w2]) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            ++result.nodes_explored;
            image[static_cast<size_t>(u)] = w;
            used[static_cast<size_t>(w)] = 1;
            if (self(self, depth + 1)) return true;
            image[static_cast<size_t>(u)] = -1;
            used[static_cast<size_t>(w)] = 0;
        }
        return false;
    };

    if (dfs(dfs, 0)) {
        result.isomorphic = true;
        result.witness = VertexPermutation(image.begin(), image.end());
    }
    return result;
}

std::vector<long> degree_labels(const Graph& g) {
    std::vector<long> labels(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        labels[static_cast<size_t>(v)] = g.degree(v);
    return labels;
}

// Encodes (degree, class index) into one label. Intersecting the EVC class
// with degree keeps candidate sets nested inside Degree mode's, which is what
// makes nodes_explored monotone across refinements.
void add_class_labels(std::vector<long>& label1, std::vector<long>& label2,
                      const CandidateMapping& mapping, int n) {
    for (size_t k = 0; k < mapping.classes.size(); ++k) {
        for (int v : mapping.classes[k].left)
            label1[static_cast<size_t>(v)] =
                label1[static_cast<size_t>(v)] * (n + 1) + static_cast<long>(k) + 1;
        for (int v : mapping.classes[k].right)
            label2[static_cast<size_t>(v)] =
                label2[static_cast<size_t>(v)] * (n + 1) + static_cast<long>(k) + 1;
    }
}

}  // namespace

bool verify_mapping(const Graph& g1, const Graph& g2, const VertexPermutation& f) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("verify_mapping: vertex count mismatch");
    if (!is_vertex_permutation(f, g1.vertex_count()))
        throw std::invalid_argument("verify_mapping: not a permutation of [0, n)");
    return preserves_edges(g1, g2, f);
}

MatchResult is_isomorphic(const Graph& g1, const Graph& g2, Refinement refinement,
                          const ConvergenceConfig& cfg, double tol) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return {};

    const int n = g1.vertex_count();
    std::vector<long> label1, label2;
    switch (refinement) {
        case Refinement::None:
            label1.assign(static_cast<size_t>(n), 0);
            label2.assign(static_cast<size_t>(n), 0);
            break;
        case Refinement::Degree:
            label1 = degree_labels(g1);
            label2 = degree_labels(g2);
            break;
        case Refinement::EvcClasses: {
            FilterVerdict verdict = compare(g1, g2, cfg, tol);
            if (verdict.rejected()) return {};  // sound: filter mismatches are never isomorphic
            label1 = degree_labels(g1);
            label2 = degree_labels(g2);
            if (verdict.mapping)  // TriviallyIsomorphic has no classes to add
                add_class_labels(label1, label2, *verdict.mapping, n);
            break;
        }
    }
    return search(g1, g2, label1, label2);
}

MatchResult is_isomorphic_within_classes(const Graph& g1, const Graph& g2,
                                         const CandidateMapping& mapping) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return {};
    std::vector<long> label1 = degree_labels(g1);
    std::vector<long> label2 = degree_labels(g2);
    add_class_labels(label1, label2, mapping, g1.vertex_count());
    return search(g1, g2, label1, label2);
}

bool brute_force_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    const int n = g1.vertex_count();
    if (n > 8)
        throw std::invalid_argument("brute_force_isomorphic is a test oracle, n <= 8 only");
    if (g1.edge_count() != g2.edge_count()) return false;
    VertexPermutation p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (preserves_edges(g1, g2, p)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace evciso
