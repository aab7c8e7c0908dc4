#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swapmc/enumerate.hpp"
#include "swapmc/graph.hpp"

namespace swapmc {

struct GogSpec {
    GraphSpace space;
    DegreeSequence degseq;
    int swap_arity = 2;
    EnumFilter keep;                          // filters census members and neighbors alike
    std::optional<std::vector<Graph>> census;  // precomputed gog vertices
    std::size_t max_census = kDefaultCensusCap;
    unsigned jobs = 1;
};

struct GogReport {
    std::vector<Graph> census;       // gog vertices in canonical order
    std::vector<int> component_id;   // per census index; ids ordered (size desc, first member asc)
    std::vector<std::size_t> component_sizes;  // indexed by component id
    std::size_t vertex_count = 0;
    std::size_t frozen_count = 0;    // isolated gog vertices

    int component_of(const Graph& g) const;  // throws InvalidInput when g is not a vertex
    bool connected() const { return component_sizes.size() <= 1; }
};

GogReport build_gog(const GogSpec& spec);

// matrix[c][i]: component c contains a member of isomorphism class i.
// Throws ClassMismatch unless the classes cover the census.
std::vector<std::vector<bool>> components_intersect_classes(const GogReport& report,
                                                            const IsoClasses& classes);

}  // namespace swapmc
