#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evciso {

/// Thrown by the edge-list parser; the message names the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// mapping[v] = image of vertex v. Valid iff it is a bijection on [0, n).
using VertexPermutation = std::vector<int>;

/// Vertex degrees sorted non-increasing.
using DegreeSequence = std::vector<int>;

/// Simple undirected graph: 0-indexed vertices, no self-loops, no duplicate
/// edges. Edges are kept canonically as (min, max) pairs in ascending order,
/// so graph equality and text round-trips are exact. Immutable after
/// construction; safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Canonicalizes and deduplicates the edge list. Throws
    /// std::invalid_argument on self-loops or endpoints outside [0, n).
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Row-major n*n symmetric 0/1 matrix with zero diagonal.
    std::vector<std::uint8_t> adjacency_matrix() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // canonical (min,max), sorted
    std::vector<std::vector<int>> adj_;       // sorted neighbor lists
};

/// Parses the edge-list format:
///   line 1: "<n> <m>", then m lines "<u> <v>" with 0 <= u,v < n and u != v.
/// Blank lines and lines starting with '#' are ignored; CRLF is tolerated.
/// Duplicate edge lines collapse to one edge. Throws ParseError with the
/// line number on malformed input, out-of-range endpoints, self-loops, or
/// negative counts.
Graph parse_graph(const std::string& text);

Graph read_graph_file(const std::string& path);

/// Inverse of parse_graph: "<n> <m>" header plus one line per canonical edge.
std::string render_edge_list(const Graph& g);

void write_graph_file(const Graph& g, const std::string& path);

DegreeSequence degree_sequence(const Graph& g);

/// Relabels g by p: edge {u,v} in g iff {p[u],p[v]} in the result.
/// Throws std::invalid_argument if p is not a permutation of [0, g.n).
Graph permute(const Graph& g, const VertexPermutation& p);

bool is_vertex_permutation(const VertexPermutation& p, int n);
VertexPermutation inverse_permutation(const VertexPermutation& p);

}  // namespace evciso
