#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swapmc/graph.hpp"
#include "swapmc/swaps.hpp"

namespace swapmc {

enum class ConnectivityStatus {
    AlwaysConnected,
    ConnectedByCriterion,
    DisconnectedByCriterion,
    ExternallyCharacterized,
};

std::string to_string(ConnectivityStatus s);

struct ConnectivityVerdict {
    ConnectivityStatus status = ConnectivityStatus::AlwaysConnected;
    std::string witness;  // names the failed clause when disconnected
};

// clause1: some degree is odd; clause2: some k_v - (n-1) is negative or
// odd. The multiloop-graph gog with at least two members is connected iff
// both clauses hold.
std::pair<bool, bool> multiloop_criterion(const DegreeSequence& d);

ConnectivityVerdict space_connectivity(const GraphSpace& s, const DegreeSequence& d);

// While two loops exist, swaps the two with the smallest vertices into a
// double edge. Returns the reached graph (at most one loop remains) and
// the swap trace; every intermediate is loopy-multigraph valid.
std::pair<Graph, std::vector<SwapMove>> reduce_loops_loopy_multigraph(const Graph& g);

// For a loopy-multigraph with exactly one loop (u,u), swaps it with the
// first edge disjoint from u; throws NoDisjointEdge if every edge touches
// u.
std::pair<Graph, SwapMove> eliminate_last_loop(const Graph& g);

// Drives a multiloop-graph whose degree sequence satisfies both criterion
// clauses to the loop-saturated graph: floor(k_u/2) loops at every vertex
// and a simple remainder with degrees k_u mod 2.
std::pair<Graph, std::vector<SwapMove>> saturate_loops_multiloop(const Graph& g);

}  // namespace swapmc
