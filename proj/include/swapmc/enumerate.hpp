#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swapmc/graph.hpp"

namespace swapmc {

inline constexpr std::size_t kDefaultCensusCap = 1'000'000;

// Filters applied during enumeration and as a gog keep-predicate.
// Triangle filters are only applicable in the simple space.
struct EnumFilter {
    std::optional<long> triangle_count;
    std::optional<TriangleSequence> triangle_seq;
    GraphPredicate custom;

    bool has_triangle_filter() const { return triangle_count || triangle_seq; }
    bool passes(const Graph& g) const;
};

void validate_filter(const GraphSpace& s, const EnumFilter& f, std::size_t n);

// Every labeled graph valid in s with degree sequence d passing f, each
// exactly once, in canonical (sorted edge list) order. Throws
// CensusTooLarge when more than max_results graphs match.
std::vector<Graph> enumerate_graphs(const GraphSpace& s, const DegreeSequence& d,
                                    const EnumFilter& f = {},
                                    std::size_t max_results = kDefaultCensusCap,
                                    unsigned jobs = 1);

struct CanonicalForm {
    Graph graph;                  // canonical representative
    std::vector<int> relabeling;  // relabeling[old vertex] = canonical label
};

// canonical_form(g).graph == canonical_form(h).graph iff g and h are
// isomorphic (as labeled multigraphs with loops).
CanonicalForm canonical_form(const Graph& g);

struct IsoClass {
    Graph representative;  // canonical form
    std::size_t size = 0;
};

struct IsoClasses {
    std::vector<IsoClass> classes;  // sorted by representative
    std::size_t total = 0;
};

IsoClasses isomorphism_classes(const std::vector<Graph>& graphs);

}  // namespace swapmc
