#include "swapmc/swaps.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace swapmc {

namespace {

void check_index(const Graph& g, int i) {
    if (i < 0 || i >= g.edge_count()) throw IndexOutOfRange("edge-instance index out of range");
}

}  // namespace

Graph apply_double_swap(const Graph& g, const SwapMove& m) {
    check_index(g, m.i);
    check_index(g, m.j);
    if (m.i == m.j) throw InvalidInput("swap requires two distinct edge instances");
    const Edge a = g.edges()[m.i];
    const Edge b = g.edges()[m.j];
    std::vector<Edge> edges = g.edges();
    if (m.pairing == Pairing::CrossA) {
        edges[m.i] = make_edge(a.first, b.first);
        edges[m.j] = make_edge(a.second, b.second);
    } else {
        edges[m.i] = make_edge(a.first, b.second);
        edges[m.j] = make_edge(a.second, b.first);
    }
    std::sort(edges.begin(), edges.end());
    return graph_from_sorted_edges(g.vertex_count(), std::move(edges));
}

std::vector<Graph> double_swap_neighbors(const Graph& g, const GraphSpace& s) {
    if (!is_valid_in_space(g, s)) throw InvalidInput("graph is not valid in the requested space");
    const int m = g.edge_count();
    std::set<Graph> seen;
    std::vector<Edge> buf;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (Pairing p : {Pairing::CrossA, Pairing::CrossB}) {
                const Edge a = g.edges()[i];
                const Edge b = g.edges()[j];
                buf = g.edges();
                if (p == Pairing::CrossA) {
                    buf[i] = make_edge(a.first, b.first);
                    buf[j] = make_edge(a.second, b.second);
                } else {
                    buf[i] = make_edge(a.first, b.second);
                    buf[j] = make_edge(a.second, b.first);
                }
                std::sort(buf.begin(), buf.end());
                if (buf == g.edges()) continue;
                if (!edge_list_valid_in_space(buf, s)) continue;
                seen.insert(graph_from_sorted_edges(g.vertex_count(), std::vector<Edge>(buf)));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

void check_k_move(const Graph& g, const KSwapMove& m) {
    const int k = static_cast<int>(m.indices.size());
    if (k < 2) throw BadArity("k edge-swap requires k >= 2");
    if (m.mobile_second.size() != m.indices.size())
        throw InvalidInput("one mobile-endpoint choice per chosen instance required");
    for (int idx : m.indices) check_index(g, idx);
    std::vector<int> sorted = m.indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("chosen edge-instance indices must be distinct");
}

}  // namespace

Graph apply_k_swap(const Graph& g, const KSwapMove& m) {
    check_k_move(g, m);
    const int k = static_cast<int>(m.indices.size());
    std::vector<int> fixed(k), mobile(k);
    for (int t = 0; t < k; ++t) {
        const Edge& e = g.edges()[m.indices[t]];
        mobile[t] = m.mobile_second[t] ? e.second : e.first;
        fixed[t] = m.mobile_second[t] ? e.first : e.second;
    }
    std::vector<Edge> edges = g.edges();
    for (int t = 0; t < k; ++t) {
        const int src = m.forward ? (t + 1) % k : (t + k - 1) % k;
        edges[m.indices[t]] = make_edge(fixed[t], mobile[src]);
    }
    std::sort(edges.begin(), edges.end());
    return graph_from_sorted_edges(g.vertex_count(), std::move(edges));
}

KSwapMove inverse_k_swap(const Graph& g, const KSwapMove& m) {
    check_k_move(g, m);
    const int k = static_cast<int>(m.indices.size());
    std::vector<int> fixed(k), mobile(k);
    for (int t = 0; t < k; ++t) {
        const Edge& e = g.edges()[m.indices[t]];
        mobile[t] = m.mobile_second[t] ? e.second : e.first;
        fixed[t] = m.mobile_second[t] ? e.first : e.second;
    }
    std::vector<Edge> new_edges(k);
    std::vector<int> arrived(k);  // the mobile endpoint each rewired instance received
    for (int t = 0; t < k; ++t) {
        const int src = m.forward ? (t + 1) % k : (t + k - 1) % k;
        arrived[t] = mobile[src];
        new_edges[t] = make_edge(fixed[t], arrived[t]);
    }

    const Graph h = apply_k_swap(g, m);
    KSwapMove inv;
    inv.forward = !m.forward;
    inv.indices.resize(k);
    inv.mobile_second.resize(k);
    std::vector<bool> used(h.edges().size(), false);
    for (int t = 0; t < k; ++t) {
        const auto range = std::equal_range(h.edges().begin(), h.edges().end(), new_edges[t]);
        int pos = -1;
        for (auto it = range.first; it != range.second; ++it) {
            const int idx = static_cast<int>(it - h.edges().begin());
            if (!used[idx]) {
                pos = idx;
                break;
            }
        }
        used[pos] = true;
        inv.indices[t] = pos;
        inv.mobile_second[t] = !is_loop(new_edges[t]) && new_edges[t].second == arrived[t];
    }
    return inv;
}

std::vector<Graph> k_swap_neighbors(const Graph& g, const GraphSpace& s, int k,
                                    const GraphPredicate& keep) {
    if (k < 2) throw BadArity("k edge-swap requires k >= 2");
    if (!is_valid_in_space(g, s)) throw InvalidInput("graph is not valid in the requested space");
    if (keep && !keep(g)) throw InvalidInput("graph does not satisfy the keep predicate");
    std::set<Graph> seen;
    detail::for_each_k_swap_candidate(g, k, [&](const std::vector<Edge>& candidate) {
        if (candidate == g.edges()) return;
        if (!edge_list_valid_in_space(candidate, s)) return;
        Graph h = graph_from_sorted_edges(g.vertex_count(), std::vector<Edge>(candidate));
        if (keep && !keep(h)) return;
        seen.insert(std::move(h));
    });
    return {seen.begin(), seen.end()};
}

}  // namespace swapmc
