#include "evciso/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace evciso {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range [0, " +
                                        std::to_string(n) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(static_cast<size_t>(n_), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::uint8_t> Graph::adjacency_matrix() const {
    std::vector<std::uint8_t> a(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
    for (auto [u, v] : edges_) {
        a[static_cast<size_t>(u) * n_ + v] = 1;
        a[static_cast<size_t>(v) * n_ + u] = 1;
    }
    return a;
}

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Strips one trailing '\r' so CRLF files parse like LF files.
std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

bool fully_consumed(std::istringstream& s) {
    s >> std::ws;
    return s.eof();
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    long long n = -1, m = -1;
    int header_line = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = chomp(raw);
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (!(ls >> n >> m) || !fully_consumed(ls))
            fail(line_no, "expected header '<n> <m>', got '" + line + "'");
        if (n < 0 || m < 0) fail(line_no, "negative counts in header '" + line + "'");
        header_line = line_no;
        break;
    }
    if (header_line == 0) throw ParseError("missing '<n> <m>' header line");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    long long seen = 0;
    while (seen < m && std::getline(in, raw)) {
        ++line_no;
        std::string line = chomp(raw);
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v) || !fully_consumed(ls))
            fail(line_no, "expected edge '<u> <v>', got '" + line + "'");
        if (u == v) fail(line_no, "self-loop '" + line + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(line_no, "endpoint out of range [0, " + std::to_string(n) +
                              ") in '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen < m)
        throw ParseError("unexpected end of input: header promised " +
                         std::to_string(m) + " edges, found " + std::to_string(seen));
    while (std::getline(in, raw)) {
        ++line_no;
        if (!blank_or_comment(chomp(raw)))
            fail(line_no, "trailing content after " + std::to_string(m) + " edges");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string render_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << render_edge_list(g);
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence degs(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        degs[static_cast<size_t>(v)] = g.degree(v);
    std::sort(degs.begin(), degs.end(), std::greater<>());
    return degs;
}

bool is_vertex_permutation(const VertexPermutation& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int image : p) {
        if (image < 0 || image >= n || seen[static_cast<size_t>(image)]) return false;
        seen[static_cast<size_t>(image)] = 1;
    }
    return true;
}

Graph permute(const Graph& g, const VertexPermutation& p) {
    const int n = g.vertex_count();
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("permutation size mismatch: graph has " +
                                    std::to_string(n) + " vertices, permutation has " +
                                    std::to_string(p.size()));
    if (!is_vertex_permutation(p, n))
        throw std::invalid_argument("mapping is not a permutation of [0, " +
                                    std::to_string(n) + ")");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        edges.emplace_back(p[static_cast<size_t>(u)], p[static_cast<size_t>(v)]);
    return Graph(n, std::move(edges));
}

VertexPermutation inverse_permutation(const VertexPermutation& p) {
    const int n = static_cast<int>(p.size());
    if (!is_vertex_permutation(p, n))
        throw std::invalid_argument("mapping is not a permutation");
    VertexPermutation inv(p.size());
    for (int v = 0; v < n; ++v) inv[static_cast<size_t>(p[static_cast<size_t>(v)])] = v;
    return inv;
}

}  // namespace evciso
