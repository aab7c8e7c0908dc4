#include "swapmc/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace swapmc {

std::string GraphSpace::name() const {
    switch (loops) {
        case LoopPolicy::Forbidden:
            return multiedges == MultiedgePolicy::SingleOnly ? "simple" : "multigraph";
        case LoopPolicy::SingleOnly:
            return multiedges == MultiedgePolicy::SingleOnly ? "loopy-graph" : "loopy-multigraph";
        case LoopPolicy::Unlimited:
            return multiedges == MultiedgePolicy::SingleOnly ? "multiloop-graph" : "pseudograph";
    }
    return "?";
}

GraphSpace GraphSpace::from_name(const std::string& name) {
    for (const GraphSpace& s : all())
        if (s.name() == name) return s;
    // short alias used on the command line
    if (name == "multiloop") return multiloop_graph();
    if (name == "loopy") return loopy_graph();
    throw InvalidInput("unknown graph space: " + name);
}

const std::array<GraphSpace, 6>& GraphSpace::all() {
    static const std::array<GraphSpace, 6> spaces = {
        simple(),          multigraph(),      loopy_graph(),
        loopy_multigraph(), multiloop_graph(), pseudograph(),
    };
    return spaces;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) throw InvalidInput("vertex count must be positive");
    for (Edge& e : edges_) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
            throw InvalidInput("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
}

std::size_t hash_edge_list(int n, const std::vector<Edge>& edges) {
    // FNV-1a over the vertex count and endpoint stream
    std::uint64_t h = 0xCBF29CE484222325ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 0x100000001B3ULL;
    };
    mix(static_cast<std::uint64_t>(n));
    for (const Edge& e : edges) {
        mix(static_cast<std::uint64_t>(e.first));
        mix(static_cast<std::uint64_t>(e.second));
    }
    return static_cast<std::size_t>(h);
}

std::size_t Graph::hash() const { return hash_edge_list(n_, edges_); }

Graph graph_from_sorted_edges(int n, std::vector<Edge>&& edges) {
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    return g;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        d[e.first] += 1;
        d[e.second] += 1;  // a loop hits the same entry twice
    }
    return d;
}

void validate_degree_sequence(const DegreeSequence& d) {
    if (d.empty()) throw InvalidDegreeSequence("degree sequence is empty");
    long sum = 0;
    for (int k : d) {
        if (k <= 0) throw InvalidDegreeSequence("degree sequence has a non-positive entry");
        sum += k;
    }
    if (sum % 2 != 0) throw InvalidDegreeSequence("degree sum is odd");
}

void validate_triangle_sequence(const TriangleSequence& t) {
    long sum = 0;
    for (int c : t) {
        if (c < 0) throw InvalidTriangleSequence("triangle sequence has a negative entry");
        sum += c;
    }
    if (sum % 3 != 0) throw InvalidTriangleSequence("triangle sequence sum is not divisible by 3");
}

bool is_simple(const Graph& g) {
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (is_loop(es[i])) return false;
        if (i > 0 && es[i] == es[i - 1]) return false;
    }
    return true;
}

bool edge_list_valid_in_space(const std::vector<Edge>& sorted_edges, const GraphSpace& s) {
    for (std::size_t i = 0; i < sorted_edges.size(); ++i) {
        const Edge& e = sorted_edges[i];
        const bool dup = i > 0 && e == sorted_edges[i - 1];
        if (is_loop(e)) {
            if (s.loops == LoopPolicy::Forbidden) return false;
            if (dup && s.loops == LoopPolicy::SingleOnly) return false;
        } else {
            if (dup && s.multiedges == MultiedgePolicy::SingleOnly) return false;
        }
    }
    return true;
}

bool is_valid_in_space(const Graph& g, const GraphSpace& s) {
    return edge_list_valid_in_space(g.edges(), s);
}

namespace {

// Per-vertex adjacency bitsets; only defined for simple graphs.
std::vector<std::uint64_t> adjacency_words(const Graph& g, int words) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()) * words, 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.first) * words + e.second / 64] |= 1ULL << (e.second % 64);
        adj[static_cast<std::size_t>(e.second) * words + e.first / 64] |= 1ULL << (e.first % 64);
    }
    return adj;
}

void require_simple(const Graph& g) {
    if (!is_simple(g)) throw NonSimpleGraph("triangle statistics are defined on simple graphs only");
}

}  // namespace

long triangle_count(const Graph& g) {
    require_simple(g);
    const int n = g.vertex_count();
    const int words = (n + 63) / 64;
    const auto adj = adjacency_words(g, words);
    long total = 0;
    for (const Edge& e : g.edges()) {
        const auto* a = &adj[static_cast<std::size_t>(e.first) * words];
        const auto* b = &adj[static_cast<std::size_t>(e.second) * words];
        // count common neighbors w > e.second so each triangle is seen once
        for (int w = e.second / 64; w < words; ++w) {
            std::uint64_t common = a[w] & b[w];
            if (w == e.second / 64)
                common &= ~((2ULL << (e.second % 64)) - 1);
            total += std::popcount(common);
        }
    }
    return total;
}

TriangleSequence triangle_sequence(const Graph& g) {
    require_simple(g);
    const int n = g.vertex_count();
    const int words = (n + 63) / 64;
    const auto adj = adjacency_words(g, words);
    TriangleSequence t(n, 0);
    for (const Edge& e : g.edges()) {
        const auto* a = &adj[static_cast<std::size_t>(e.first) * words];
        const auto* b = &adj[static_cast<std::size_t>(e.second) * words];
        for (int w = e.second / 64; w < words; ++w) {
            std::uint64_t common = a[w] & b[w];
            if (w == e.second / 64)
                common &= ~((2ULL << (e.second % 64)) - 1);
            while (common) {
                const int v = w * 64 + std::countr_zero(common);
                common &= common - 1;
                ++t[e.first];
                ++t[e.second];
                ++t[v];
            }
        }
    }
    return t;
}

std::string serialize(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
    return out.str();
}

Graph parse_graph(std::istream& in) {
    int n = 0;
    long m = 0;
    if (!(in >> n >> m)) throw ParseError("expected header line \"n m\"");
    if (n <= 0) throw ParseError("vertex count must be positive");
    if (m < 0) throw ParseError("edge count must be non-negative");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("expected " + std::to_string(m) + " edge lines");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range");
        edges.push_back(make_edge(u, v));
    }
    return Graph(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

}  // namespace swapmc
