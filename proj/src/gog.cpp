#include "swapmc/gog.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "swapmc/swaps.hpp"

namespace swapmc {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Validity and keep-filter checks on a raw sorted candidate buffer, so the
// inner swap loop constructs Graphs only for census hits.
class BufferFilter {
  public:
    BufferFilter(int n, const GraphSpace& space, const EnumFilter& keep)
        : n_(n), space_(space), keep_(keep), adj_(n, 0), tri_(n, 0) {}

    bool passes(const std::vector<Edge>& sorted_edges) {
        if (!edge_list_valid_in_space(sorted_edges, space_)) return false;
        if (!keep_.has_triangle_filter()) {
            if (!keep_.custom) return true;
            return keep_.custom(graph_from_sorted_edges(n_, std::vector<Edge>(sorted_edges)));
        }
        std::fill(adj_.begin(), adj_.end(), 0);
        for (const Edge& e : sorted_edges) {
            adj_[e.first] |= 1ULL << e.second;
            adj_[e.second] |= 1ULL << e.first;
        }
        if (keep_.triangle_count) {
            long total = 0;
            for (const Edge& e : sorted_edges) {
                const std::uint64_t above = ~((2ULL << e.second) - 1);
                total += std::popcount(adj_[e.first] & adj_[e.second] & above);
            }
            if (total != *keep_.triangle_count) return false;
        }
        if (keep_.triangle_seq) {
            std::fill(tri_.begin(), tri_.end(), 0);
            for (const Edge& e : sorted_edges) {
                const std::uint64_t above = ~((2ULL << e.second) - 1);
                for (std::uint64_t rest = adj_[e.first] & adj_[e.second] & above; rest;
                     rest &= rest - 1) {
                    const int w = std::countr_zero(rest);
                    ++tri_[e.first];
                    ++tri_[e.second];
                    ++tri_[w];
                }
            }
            if (tri_ != *keep_.triangle_seq) return false;
        }
        if (keep_.custom)
            return keep_.custom(graph_from_sorted_edges(n_, std::vector<Edge>(sorted_edges)));
        return true;
    }

  private:
    int n_;
    GraphSpace space_;
    const EnumFilter& keep_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> tri_;
};

}  // namespace

int GogReport::component_of(const Graph& g) const {
    const auto it = std::lower_bound(census.begin(), census.end(), g);
    if (it == census.end() || *it != g) throw InvalidInput("graph is not a vertex of this gog");
    return component_id[it - census.begin()];
}

GogReport build_gog(const GogSpec& spec) {
    validate_degree_sequence(spec.degseq);
    validate_filter(spec.space, spec.keep, spec.degseq.size());
    if (spec.swap_arity < 2) throw BadArity("gog swaps require arity >= 2");

    GogReport report;
    if (spec.census) {
        report.census = *spec.census;
        std::sort(report.census.begin(), report.census.end());
        if (std::adjacent_find(report.census.begin(), report.census.end()) != report.census.end())
            throw InvalidInput("supplied census contains duplicate graphs");
        for (const Graph& g : report.census) {
            if (degree_sequence(g) != spec.degseq)
                throw InvalidInput("census graph has a different degree sequence");
            if (!is_valid_in_space(g, spec.space) || !spec.keep.passes(g))
                throw InvalidInput("census graph violates the space or keep filter");
        }
        if (report.census.size() > spec.max_census)
            throw CensusTooLarge("supplied census exceeds the configured cap");
    } else {
        report.census = enumerate_graphs(spec.space, spec.degseq, spec.keep, spec.max_census,
                                         spec.jobs);
    }

    const std::size_t count = report.census.size();
    report.vertex_count = count;
    const int n = static_cast<int>(spec.degseq.size());

    std::unordered_multimap<std::size_t, int> index;
    index.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        index.emplace(report.census[i].hash(), static_cast<int>(i));
    auto lookup = [&](const std::vector<Edge>& edges) -> int {
        const auto range = index.equal_range(hash_edge_list(n, edges));
        for (auto it = range.first; it != range.second; ++it)
            if (report.census[it->second].edges() == edges) return it->second;
        return -1;
    };

    const unsigned jobs = std::max(1u, spec.jobs);
    std::vector<std::vector<std::pair<int, int>>> found(jobs);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&](unsigned id) {
        BufferFilter filter(n, spec.space, spec.keep);
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            detail::for_each_k_swap_candidate(
                report.census[i], spec.swap_arity, [&](const std::vector<Edge>& candidate) {
                    if (!filter.passes(candidate)) return;
                    const int j = lookup(candidate);
                    if (j >= 0 && j != static_cast<int>(i))
                        found[id].emplace_back(static_cast<int>(i), j);
                });
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
        for (auto& t : threads) t.join();
    }

    Dsu dsu(count);
    for (const auto& batch : found)
        for (const auto& [a, b] : batch) dsu.unite(a, b);

    // components ordered by (size desc, first member asc)
    std::unordered_map<int, std::pair<std::size_t, int>> stats;  // root -> (size, first)
    for (std::size_t i = 0; i < count; ++i) {
        const int root = dsu.find(static_cast<int>(i));
        auto it = stats.try_emplace(root, 0, static_cast<int>(i)).first;
        ++it->second.first;
    }
    std::vector<std::pair<int, std::pair<std::size_t, int>>> order(stats.begin(), stats.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second.first != b.second.first) return a.second.first > b.second.first;
        return a.second.second < b.second.second;
    });
    std::unordered_map<int, int> root_to_id;
    report.component_sizes.reserve(order.size());
    for (const auto& [root, info] : order) {
        root_to_id.emplace(root, static_cast<int>(report.component_sizes.size()));
        report.component_sizes.push_back(info.first);
    }
    report.component_id.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        report.component_id[i] = root_to_id.at(dsu.find(static_cast<int>(i)));
    report.frozen_count = static_cast<std::size_t>(
        std::count(report.component_sizes.begin(), report.component_sizes.end(), std::size_t{1}));
    return report;
}

std::vector<std::vector<bool>> components_intersect_classes(const GogReport& report,
                                                            const IsoClasses& classes) {
    std::unordered_map<Graph, int, GraphHash> class_of;
    for (std::size_t c = 0; c < classes.classes.size(); ++c)
        class_of.emplace(classes.classes[c].representative, static_cast<int>(c));
    std::vector<std::vector<bool>> matrix(report.component_sizes.size(),
                                          std::vector<bool>(classes.classes.size(), false));
    for (std::size_t i = 0; i < report.census.size(); ++i) {
        const auto it = class_of.find(canonical_form(report.census[i]).graph);
        if (it == class_of.end())
            throw ClassMismatch("census graph belongs to none of the supplied classes");
        matrix[report.component_id[i]][it->second] = true;
    }
    return matrix;
}

}  // namespace swapmc
