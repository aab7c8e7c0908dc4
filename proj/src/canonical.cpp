#include "swapmc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace swapmc {

namespace {

// (neighbor color, multiplicity) profile plus loop count; iterated until
// the partition stops refining. Colors are ranked by signature value, so
// the cell order is isomorphism-invariant.
std::vector<int> refine_colors(int n, const std::vector<std::vector<std::pair<int, int>>>& nbrs,
                               const std::vector<int>& loops) {
    std::vector<int> color(n, 0);
    int ncolors = 1;
    for (;;) {
        using Sig = std::tuple<int, int, std::vector<std::pair<int, int>>>;
        std::vector<Sig> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> profile;
            profile.reserve(nbrs[v].size());
            for (const auto& [w, mult] : nbrs[v]) profile.emplace_back(color[w], mult);
            std::sort(profile.begin(), profile.end());
            sig[v] = {color[v], loops[v], std::move(profile)};
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        int next = 0;
        std::vector<int> fresh(n);
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
            fresh[order[i]] = next;
        }
        if (next + 1 == ncolors) return fresh;
        ncolors = next + 1;
        color = std::move(fresh);
    }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> nbrs(n);
    std::vector<int> loops(n, 0);
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size();) {
        std::size_t j = i;
        while (j < es.size() && es[j] == es[i]) ++j;
        const int mult = static_cast<int>(j - i);
        const auto [u, v] = es[i];
        if (u == v) {
            loops[u] += mult;
        } else {
            nbrs[u].emplace_back(v, mult);
            nbrs[v].emplace_back(u, mult);
        }
        i = j;
    }

    const std::vector<int> color = refine_colors(n, nbrs, loops);
    const int ncolors = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> cells(ncolors);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);

    double assignments = 1;
    for (const auto& cell : cells)
        for (std::size_t i = 2; i <= cell.size(); ++i) assignments *= static_cast<double>(i);
    if (assignments > 1e9)
        throw InvalidInput("canonical labeling: refinement cells too symmetric for backtracking");

    std::vector<int> offset(ncolors, 0);
    for (int c = 1; c < ncolors; ++c) offset[c] = offset[c - 1] + static_cast<int>(cells[c - 1].size());

    std::vector<int> perm(n, 0);
    std::vector<Edge> best, candidate(es.size());
    std::vector<int> best_perm;

    auto evaluate = [&]() {
        for (std::size_t i = 0; i < es.size(); ++i)
            candidate[i] = make_edge(perm[es[i].first], perm[es[i].second]);
        std::sort(candidate.begin(), candidate.end());
        if (best.empty() ? true : candidate < best) {
            best = candidate;
            best_perm = perm;
        }
    };

    // Odometer over per-cell permutations; labels within a cell occupy the
    // cell's contiguous position range.
    std::vector<std::vector<int>> arrangement = cells;
    auto apply_arrangement = [&]() {
        for (int c = 0; c < ncolors; ++c)
            for (std::size_t i = 0; i < arrangement[c].size(); ++i)
                perm[arrangement[c][i]] = offset[c] + static_cast<int>(i);
        evaluate();
    };
    if (es.empty()) {
        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        return {Graph(n, {}), identity};
    }
    apply_arrangement();
    for (;;) {
        int c = 0;
        while (c < ncolors && !std::next_permutation(arrangement[c].begin(), arrangement[c].end())) ++c;
        if (c == ncolors) break;
        apply_arrangement();
    }

    return {graph_from_sorted_edges(n, std::move(best)), std::move(best_perm)};
}

IsoClasses isomorphism_classes(const std::vector<Graph>& graphs) {
    std::map<Graph, std::size_t> counts;
    for (const Graph& g : graphs) ++counts[canonical_form(g).graph];
    IsoClasses out;
    out.total = graphs.size();
    out.classes.reserve(counts.size());
    for (auto& [rep, size] : counts) out.classes.push_back({rep, size});
    return out;
}

}  // namespace swapmc
