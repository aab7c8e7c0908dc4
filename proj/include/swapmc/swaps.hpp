#pragma once

#include <algorithm>
#include <vector>

#include "swapmc/graph.hpp"

namespace swapmc {

// The two non-identity pairings of a double edge-swap on stored instances
// (u,v),(x,y): CrossA yields (u,x),(v,y) and CrossB yields (u,y),(v,x).
// The identity pairing is not representable: gog edges join distinct graphs.
enum class Pairing { CrossA, CrossB };

struct SwapMove {
    int i = 0;
    int j = 0;
    Pairing pairing = Pairing::CrossA;
};

Graph apply_double_swap(const Graph& g, const SwapMove& m);

// Deduplicated, canonically sorted list of graphs reachable by one
// space-valid double edge-swap; never contains g itself.
std::vector<Graph> double_swap_neighbors(const Graph& g, const GraphSpace& s);

// A k edge-swap: each chosen instance contributes a mobile endpoint, and
// the cyclic permutation shifts mobile endpoints one position forward or
// backward over the listed index order.
struct KSwapMove {
    std::vector<int> indices;        // k distinct instance indices, cyclic order as listed
    std::vector<bool> mobile_second; // per instance: mobile endpoint is .second of the stored pair
    bool forward = true;             // forward: edge t receives the mobile endpoint of edge t+1
};

Graph apply_k_swap(const Graph& g, const KSwapMove& m);

// The move on apply_k_swap(g, m) that restores g.
KSwapMove inverse_k_swap(const Graph& g, const KSwapMove& m);

// Deduplicated space-valid neighbors under all arity-k moves that also
// satisfy `keep` (empty predicate = no constraint).
std::vector<Graph> k_swap_neighbors(const Graph& g, const GraphSpace& s, int k,
                                    const GraphPredicate& keep = {});

namespace detail {

// Visits every arity-k swap result of g as a normalized, sorted edge list.
// The buffer is reused between calls; candidates may repeat and are not
// validity-filtered. Backward moves are omitted: reversing a cyclic order
// produces the same result set.
template <typename F>
void for_each_k_swap_candidate(const Graph& g, int k, F&& fn) {
    const auto& edges = g.edges();
    const int m = g.edge_count();
    if (k < 2 || k > m) return;

    std::vector<int> comb(k);          // ascending chosen indices
    std::vector<int> order(k);         // cyclic order: comb[0] fixed first
    std::vector<int> fixed(k), mobile(k);
    std::vector<Edge> candidate(edges.begin(), edges.end());

    for (int t = 0; t < k; ++t) comb[t] = t;
    for (;;) {
        // all cyclic orders with the first chosen index pinned
        std::vector<int> tail(comb.begin() + 1, comb.end());
        std::sort(tail.begin(), tail.end());
        do {
            order[0] = comb[0];
            std::copy(tail.begin(), tail.end(), order.begin() + 1);
            // orientation odometer; loops contribute a single option
            std::vector<int> orient(k, 0);
            for (;;) {
                for (int t = 0; t < k; ++t) {
                    const Edge& e = edges[order[t]];
                    mobile[t] = orient[t] ? e.second : e.first;
                    fixed[t] = orient[t] ? e.first : e.second;
                }
                candidate.assign(edges.begin(), edges.end());
                for (int t = 0; t < k; ++t)
                    candidate[order[t]] = make_edge(fixed[t], mobile[(t + 1) % k]);
                std::sort(candidate.begin(), candidate.end());
                fn(candidate);

                int pos = k - 1;
                while (pos >= 0) {
                    if (orient[pos] == 0 && !is_loop(edges[order[pos]])) {
                        orient[pos] = 1;
                        break;
                    }
                    orient[pos] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
        } while (std::next_permutation(tail.begin(), tail.end()));

        // next combination
        int pos = k - 1;
        while (pos >= 0 && comb[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++comb[pos];
        for (int t = pos + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
    }
}

}  // namespace detail

}  // namespace swapmc
