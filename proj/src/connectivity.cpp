#include "swapmc/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace swapmc {

std::string to_string(ConnectivityStatus s) {
    switch (s) {
        case ConnectivityStatus::AlwaysConnected: return "AlwaysConnected";
        case ConnectivityStatus::ConnectedByCriterion: return "ConnectedByCriterion";
        case ConnectivityStatus::DisconnectedByCriterion: return "DisconnectedByCriterion";
        case ConnectivityStatus::ExternallyCharacterized: return "ExternallyCharacterized";
    }
    return "?";
}

std::pair<bool, bool> multiloop_criterion(const DegreeSequence& d) {
    validate_degree_sequence(d);
    const long n = static_cast<long>(d.size());
    bool odd_degree = false;
    bool defect = false;
    for (int k : d) {
        if (k % 2 != 0) odd_degree = true;
        const long diff = k - (n - 1);
        if (diff < 0 || diff % 2 != 0) defect = true;
    }
    return {odd_degree, defect};
}

ConnectivityVerdict space_connectivity(const GraphSpace& s, const DegreeSequence& d) {
    validate_degree_sequence(d);
    if (s == GraphSpace::loopy_graph()) return {ConnectivityStatus::ExternallyCharacterized, ""};
    if (s == GraphSpace::multiloop_graph()) {
        const auto [odd_degree, defect] = multiloop_criterion(d);
        if (odd_degree && defect) return {ConnectivityStatus::ConnectedByCriterion, ""};
        return {ConnectivityStatus::DisconnectedByCriterion,
                !odd_degree ? "no odd degree" : "no vertex with k_v-(n-1) negative or odd"};
    }
    return {ConnectivityStatus::AlwaysConnected, ""};
}

namespace {

int find_instance(const Graph& g, const Edge& e) {
    const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
    if (it == g.edges().end() || *it != e) throw Error("edge instance not found");
    return static_cast<int>(it - g.edges().begin());
}

// The swap on instances i, j whose result replaces them by {t1, t2}.
SwapMove move_producing(const Graph& g, int i, int j, Edge t1, Edge t2) {
    if (t2 < t1) std::swap(t1, t2);
    const Edge a = g.edges()[i];
    const Edge b = g.edges()[j];
    for (Pairing p : {Pairing::CrossA, Pairing::CrossB}) {
        Edge r1 = p == Pairing::CrossA ? make_edge(a.first, b.first) : make_edge(a.first, b.second);
        Edge r2 = p == Pairing::CrossA ? make_edge(a.second, b.second) : make_edge(a.second, b.first);
        if (r2 < r1) std::swap(r1, r2);
        if (r1 == t1 && r2 == t2) return {i, j, p};
    }
    throw Error("no pairing produces the requested rewiring");
}

std::vector<int> loop_vertices(const Graph& g) {
    std::vector<int> loops;
    for (const Edge& e : g.edges())
        if (is_loop(e)) loops.push_back(e.first);
    return loops;
}

}  // namespace

std::pair<Graph, std::vector<SwapMove>> reduce_loops_loopy_multigraph(const Graph& g) {
    if (!is_valid_in_space(g, GraphSpace::loopy_multigraph()))
        throw InvalidInput("graph is not a loopy-multigraph");
    Graph current = g;
    std::vector<SwapMove> trace;
    for (;;) {
        const auto loops = loop_vertices(current);  // distinct vertices: loops are single
        if (loops.size() < 2) break;
        const int u = loops[0];
        const int v = loops[1];
        const SwapMove m = move_producing(current, find_instance(current, {u, u}),
                                          find_instance(current, {v, v}), make_edge(u, v),
                                          make_edge(u, v));
        current = apply_double_swap(current, m);
        trace.push_back(m);
    }
    return {current, trace};
}

std::pair<Graph, SwapMove> eliminate_last_loop(const Graph& g) {
    if (!is_valid_in_space(g, GraphSpace::loopy_multigraph()))
        throw InvalidInput("graph is not a loopy-multigraph");
    const auto loops = loop_vertices(g);
    if (loops.size() != 1) throw InvalidInput("expected exactly one loop");
    const int u = loops[0];
    for (int j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edges()[j];
        if (e.first == u || e.second == u) continue;
        const SwapMove m = move_producing(g, find_instance(g, {u, u}), j,
                                          make_edge(u, e.first), make_edge(u, e.second));
        return {apply_double_swap(g, m), m};
    }
    throw NoDisjointEdge("every edge is incident to the looped vertex");
}

namespace {

// Non-loop neighborhood sets of a multiloop-graph.
std::vector<std::set<int>> neighbor_sets(const Graph& g) {
    std::vector<std::set<int>> nbr(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (is_loop(e)) continue;
        nbr[e.first].insert(e.second);
        nbr[e.second].insert(e.first);
    }
    return nbr;
}

struct Wedge {
    int center, v, x;
};

// Lexicographically first open wedge: edges (u,v),(u,x) with (v,x) absent.
std::optional<Wedge> find_wedge(const std::vector<std::set<int>>& nbr) {
    for (int u = 0; u < static_cast<int>(nbr.size()); ++u) {
        for (auto vit = nbr[u].begin(); vit != nbr[u].end(); ++vit) {
            for (auto xit = std::next(vit); xit != nbr[u].end(); ++xit) {
                if (!nbr[*vit].contains(*xit)) return Wedge{u, *vit, *xit};
            }
        }
    }
    return std::nullopt;
}

// Connected components of the non-loop graph, ordered by smallest member.
std::vector<std::vector<int>> nonloop_components(const std::vector<std::set<int>>& nbr) {
    const int n = static_cast<int>(nbr.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : nbr[v])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

std::pair<Graph, std::vector<SwapMove>> saturate_loops_multiloop(const Graph& g) {
    if (!is_valid_in_space(g, GraphSpace::multiloop_graph()))
        throw InvalidInput("graph is not a multiloop-graph");
    const DegreeSequence degrees = degree_sequence(g);
    const auto [odd_degree, defect] = multiloop_criterion(degrees);
    if (!odd_degree || !defect)
        throw CriterionUnsatisfied(std::string("criterion clause fails: ") +
                                   (!odd_degree ? "no odd degree"
                                                : "no vertex with k_v-(n-1) negative or odd"));

    Graph current = g;
    std::vector<SwapMove> trace;
    const long total_degree = std::accumulate(degrees.begin(), degrees.end(), 0L);
    const long max_iterations = 1000 + 10 * total_degree * g.vertex_count();

    for (long iter = 0; iter < max_iterations; ++iter) {
        const auto nbr = neighbor_sets(current);

        // rule 1: rewire an open wedge into a loop
        if (const auto w = find_wedge(nbr)) {
            const SwapMove m = move_producing(
                current, find_instance(current, make_edge(w->center, w->v)),
                find_instance(current, make_edge(w->center, w->x)),
                make_edge(w->center, w->center), make_edge(w->v, w->x));
            current = apply_double_swap(current, m);
            trace.push_back(m);
            continue;
        }

        // wedge-free: the non-loop graph is a disjoint union of cliques
        const auto comps = nonloop_components(nbr);

        // rule 2: break an edge off a complete component of size >= 4
        bool applied = false;
        for (const auto& clique : comps) {
            if (clique.size() < 4) continue;
            std::vector<char> in_clique(current.vertex_count(), 0);
            for (int v : clique) in_clique[v] = 1;
            for (int j = 0; j < current.edge_count() && !applied; ++j) {
                const Edge& e = current.edges()[j];
                if (in_clique[e.first] || in_clique[e.second]) continue;
                const int x = clique[0];
                const int y = clique[1];
                const SwapMove m =
                    move_producing(current, j, find_instance(current, make_edge(x, y)),
                                   make_edge(e.first, x), make_edge(e.second, y));
                current = apply_double_swap(current, m);
                trace.push_back(m);
                applied = true;
            }
            if (applied) break;
        }
        if (applied) continue;

        // rule 3: rewire a triangle against an isolated edge
        const auto triangle =
            std::find_if(comps.begin(), comps.end(), [](const auto& c) { return c.size() == 3; });
        const auto pair_comp =
            std::find_if(comps.begin(), comps.end(), [](const auto& c) { return c.size() == 2; });
        if (triangle != comps.end() && pair_comp != comps.end()) {
            const int p = (*pair_comp)[0];
            const int q = (*pair_comp)[1];
            const int x = (*triangle)[0];
            const int y = (*triangle)[1];
            const SwapMove m = move_producing(current, find_instance(current, make_edge(p, q)),
                                              find_instance(current, make_edge(x, y)),
                                              make_edge(p, x), make_edge(q, y));
            current = apply_double_swap(current, m);
            trace.push_back(m);
            continue;
        }
        break;
    }

    // postcondition: floor(k_u/2) loops everywhere, simple odd-degree remainder
    std::vector<int> loops(current.vertex_count(), 0);
    for (const Edge& e : current.edges())
        if (is_loop(e)) ++loops[e.first];
    for (int v = 0; v < current.vertex_count(); ++v)
        if (loops[v] != degrees[v] / 2)
            throw Error("loop saturation stalled before reaching the target graph");
    return {current, trace};
}

}  // namespace swapmc
