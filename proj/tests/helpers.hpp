#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "swapmc/enumerate.hpp"
#include "swapmc/graph.hpp"
#include "swapmc/rng.hpp"

namespace swapmc::testing {

inline Graph make_graph(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// Arbitrary multigraph with loops; valid as a pseudograph by construction.
inline Graph random_multigraph(SplitMix64& rng, int max_n = 6, int max_m = 8) {
    const int n = 1 + static_cast<int>(rng.bounded(max_n));
    const int m = static_cast<int>(rng.bounded(max_m + 1));
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        edges.push_back(make_edge(static_cast<int>(rng.bounded(n)), static_cast<int>(rng.bounded(n))));
    return Graph(n, std::move(edges));
}

inline Graph random_simple_graph(SplitMix64& rng, int max_n = 7) {
    const int n = 1 + static_cast<int>(rng.bounded(max_n));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bounded(2)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// Stub matching, retried until the result lands in the requested space;
// empty when the sequence resists (some sequences are not realizable).
inline std::optional<Graph> random_graph_in_space(SplitMix64& rng, const DegreeSequence& degrees,
                                                  const GraphSpace& space, int max_tries = 500) {
    std::vector<int> stubs;
    for (std::size_t v = 0; v < degrees.size(); ++v)
        for (int s = 0; s < degrees[v]; ++s) stubs.push_back(static_cast<int>(v));
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.bounded(i)]);
        std::vector<Edge> edges;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
            edges.push_back(make_edge(stubs[i], stubs[i + 1]));
        Graph g(static_cast<int>(degrees.size()), std::move(edges));
        if (is_valid_in_space(g, space)) return g;
    }
    return std::nullopt;
}

inline DegreeSequence random_degree_sequence(SplitMix64& rng, int max_n = 6, int max_degree = 4) {
    const int n = 1 + static_cast<int>(rng.bounded(max_n));
    DegreeSequence d(n);
    for (int& k : d) k = 1 + static_cast<int>(rng.bounded(max_degree));
    if (std::accumulate(d.begin(), d.end(), 0) % 2 != 0) {
        int* bump = &d[rng.bounded(n)];
        *bump = *bump == max_degree ? *bump - 1 : *bump + 1;
    }
    return d;
}

// O(n^3) triangle oracle, independent of the bitset implementation.
inline long naive_triangle_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) adj[e.first][e.second] = adj[e.second][e.first] = true;
    long total = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[a][c] && adj[b][c]) ++total;
    return total;
}

// All double-swap results by direct multiset surgery over index pairs.
inline std::vector<Graph> naive_double_swap_neighbors(const Graph& g, const GraphSpace& s) {
    std::set<Graph> seen;
    const auto& es = g.edges();
    for (int i = 0; i < g.edge_count(); ++i) {
        for (int j = 0; j < g.edge_count(); ++j) {
            if (i == j) continue;
            const auto [u, v] = es[i];
            const auto [x, y] = es[j];
            for (int pairing = 0; pairing < 2; ++pairing) {
                std::vector<Edge> rest;
                for (int t = 0; t < g.edge_count(); ++t)
                    if (t != i && t != j) rest.push_back(es[t]);
                if (pairing == 0) {
                    rest.push_back(make_edge(u, x));
                    rest.push_back(make_edge(v, y));
                } else {
                    rest.push_back(make_edge(u, y));
                    rest.push_back(make_edge(v, x));
                }
                Graph h(g.vertex_count(), std::move(rest));
                if (h == g) continue;
                if (!is_valid_in_space(h, s)) continue;
                seen.insert(std::move(h));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// All k-swap results from ordered index tuples, orientation vectors and
// both cycle directions, applied by direct multiset surgery.
inline std::vector<Graph> naive_k_swap_neighbors(const Graph& g, const GraphSpace& s, int k,
                                                 const GraphPredicate& keep = {}) {
    std::set<Graph> seen;
    const int m = g.edge_count();
    if (k > m) return {};
    std::vector<int> tuple;
    std::vector<bool> used(m, false);
    auto apply_tuple = [&](const std::vector<int>& idx, unsigned orient, bool forward) {
        std::vector<int> fixed(k), mobile(k);
        for (int t = 0; t < k; ++t) {
            const Edge& e = g.edges()[idx[t]];
            const bool second = (orient >> t) & 1u;
            mobile[t] = second ? e.second : e.first;
            fixed[t] = second ? e.first : e.second;
        }
        std::vector<Edge> rest;
        for (int t = 0; t < m; ++t)
            if (std::find(idx.begin(), idx.end(), t) == idx.end()) rest.push_back(g.edges()[t]);
        for (int t = 0; t < k; ++t) {
            const int src = forward ? (t + 1) % k : (t + k - 1) % k;
            rest.push_back(make_edge(fixed[t], mobile[src]));
        }
        Graph h(g.vertex_count(), std::move(rest));
        if (h == g || !is_valid_in_space(h, s)) return;
        if (keep && !keep(h)) return;
        seen.insert(std::move(h));
    };
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(tuple.size()) == k) {
            for (unsigned orient = 0; orient < (1u << k); ++orient)
                for (bool forward : {true, false}) apply_tuple(tuple, orient, forward);
            return;
        }
        for (int t = 0; t < m; ++t) {
            if (used[t]) continue;
            used[t] = true;
            tuple.push_back(t);
            self(self);
            tuple.pop_back();
            used[t] = false;
        }
    };
    recurse(recurse);
    return {seen.begin(), seen.end()};
}

// Census oracle: assign a multiplicity to every edge slot and filter.
inline std::vector<Graph> naive_enumerate(const GraphSpace& s, const DegreeSequence& d) {
    const int n = static_cast<int>(d.size());
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) slots.push_back({u, v});
    std::vector<Graph> out;
    std::vector<int> residual(d);
    std::vector<Edge> edges;
    auto recurse = [&](auto&& self, std::size_t slot) -> void {
        if (slot == slots.size()) {
            if (std::all_of(residual.begin(), residual.end(), [](int r) { return r == 0; }))
                out.push_back(Graph(n, edges));
            return;
        }
        const auto [u, v] = slots[slot];
        long cap;
        if (u == v) {
            cap = s.loops == LoopPolicy::Forbidden ? 0
                  : s.loops == LoopPolicy::SingleOnly ? 1
                                                      : residual[u] / 2;
        } else {
            cap = s.multiedges == MultiedgePolicy::SingleOnly ? 1
                                                              : std::min(residual[u], residual[v]);
        }
        for (long c = 0; c <= cap; ++c) {
            if (u == v ? 2 * c > residual[u] : c > std::min(residual[u], residual[v])) break;
            for (long t = 0; t < c; ++t) {
                edges.push_back({u, v});
                residual[u] -= u == v ? 2 : 1;
                if (u != v) residual[v] -= 1;
            }
            self(self, slot + 1);
            for (long t = 0; t < c; ++t) {
                edges.pop_back();
                residual[u] += u == v ? 2 : 1;
                if (u != v) residual[v] += 1;
            }
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.first], perm[e.second]));
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace swapmc::testing
