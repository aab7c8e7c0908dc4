#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "helpers.hpp"
#include "swapmc/enumerate.hpp"

using namespace swapmc;
using testing::make_graph;

TEST_CASE("tiny censuses") {
    CHECK(enumerate_graphs(GraphSpace::simple(), {1, 1}) ==
          std::vector<Graph>{make_graph(2, {{0, 1}})});

    const auto multiloop = enumerate_graphs(GraphSpace::multiloop_graph(), {2, 2, 2});
    CHECK(multiloop == std::vector<Graph>{make_graph(3, {{0, 0}, {1, 1}, {2, 2}}),
                                          make_graph(3, {{0, 1}, {0, 2}, {1, 2}})});

    // all 2-regular simple graphs on five vertices are 5-cycles
    CHECK(enumerate_graphs(GraphSpace::simple(), {2, 2, 2, 2, 2}).size() == 12);
}

TEST_CASE("census matches the slot-assignment oracle in all six spaces") {
    const std::vector<DegreeSequence> sequences = {
        {2, 2, 2}, {3, 3, 2}, {2, 1, 1}, {4, 2, 2}, {3, 3, 3, 3}, {2, 2, 2, 2, 2}, {4, 3, 2, 2, 1},
    };
    for (const auto& d : sequences) {
        for (const GraphSpace& s : GraphSpace::all()) {
            const auto fast = enumerate_graphs(s, d);
            const auto slow = testing::naive_enumerate(s, d);
            CHECK_MESSAGE(fast == slow, "space ", s.name(), " size ", fast.size(), " vs ", slow.size());
        }
    }
}

TEST_CASE("census entries are distinct, valid and degree-exact") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const auto d = testing::random_degree_sequence(rng, 5, 4);
        for (const GraphSpace& s : GraphSpace::all()) {
            const auto census = enumerate_graphs(s, d);
            CHECK(std::adjacent_find(census.begin(), census.end()) == census.end());
            CHECK(std::is_sorted(census.begin(), census.end()));
            for (const Graph& g : census) {
                CHECK(is_valid_in_space(g, s));
                CHECK(degree_sequence(g) == d);
            }
        }
    }
}

TEST_CASE("triangle filters match post-filtering") {
    const DegreeSequence d{3, 3, 2, 2, 2, 2};
    const auto all = enumerate_graphs(GraphSpace::simple(), d);
    std::map<long, std::vector<Graph>> by_count;
    for (const Graph& g : all) by_count[triangle_count(g)].push_back(g);
    for (const auto& [target, expected] : by_count) {
        EnumFilter f;
        f.triangle_count = target;
        CHECK(enumerate_graphs(GraphSpace::simple(), d, f) == expected);
    }

    std::map<TriangleSequence, std::vector<Graph>> by_seq;
    for (const Graph& g : all) by_seq[triangle_sequence(g)].push_back(g);
    for (const auto& [target, expected] : by_seq) {
        EnumFilter f;
        f.triangle_seq = target;
        CHECK(enumerate_graphs(GraphSpace::simple(), d, f) == expected);
    }
}

TEST_CASE("custom predicate filters the census") {
    EnumFilter f;
    f.custom = [](const Graph& g) { return g.edges().front() == Edge{0, 1}; };
    const auto filtered = enumerate_graphs(GraphSpace::simple(), {2, 2, 2, 2}, f);
    const auto all = enumerate_graphs(GraphSpace::simple(), {2, 2, 2, 2});
    CHECK(filtered.size() < all.size());
    for (const Graph& g : filtered) CHECK(g.edges().front() == Edge{0, 1});
}

TEST_CASE("filter and cap errors") {
    EnumFilter tri;
    tri.triangle_count = 1;
    CHECK_THROWS_AS(enumerate_graphs(GraphSpace::multigraph(), {2, 2, 2}, tri), FilterInapplicable);
    CHECK_THROWS_AS(enumerate_graphs(GraphSpace::simple(), {2, 2, 2, 2, 2}, {}, 3), CensusTooLarge);
    CHECK_THROWS_AS(enumerate_graphs(GraphSpace::simple(), {2, 2, 1}, {}), InvalidDegreeSequence);
    EnumFilter bad_seq;
    bad_seq.triangle_seq = TriangleSequence{1, 1, 1};  // wrong length
    CHECK_THROWS_AS(enumerate_graphs(GraphSpace::simple(), {2, 2, 2, 2}, bad_seq), InvalidInput);
}

TEST_CASE("parallel enumeration matches sequential") {
    const DegreeSequence d{3, 3, 2, 2, 2};
    for (const GraphSpace& s : {GraphSpace::simple(), GraphSpace::pseudograph()}) {
        const auto seq = enumerate_graphs(s, d, {}, kDefaultCensusCap, 1);
        const auto par = enumerate_graphs(s, d, {}, kDefaultCensusCap, 3);
        CHECK(seq == par);
    }
    EnumFilter f;
    f.triangle_count = 1;
    CHECK(enumerate_graphs(GraphSpace::simple(), d, f, kDefaultCensusCap, 3) ==
          enumerate_graphs(GraphSpace::simple(), d, f, kDefaultCensusCap, 1));
}

TEST_CASE("canonical form is invariant under relabeling") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testing::random_multigraph(rng, 6, 7);
        const auto canon = canonical_form(g);
        // the reported relabeling actually produces the canonical graph
        CHECK(testing::relabel(g, canon.relabeling) == canon.graph);
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        for (int shuffles = 0; shuffles < 5; ++shuffles) {
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[rng.bounded(i)]);
            CHECK(canonical_form(testing::relabel(g, perm)).graph == canon.graph);
        }
    }
}

TEST_CASE("canonical form separates small non-isomorphic graphs") {
    const Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_form(path).graph != canonical_form(star).graph);
    CHECK(canonical_form(make_graph(3, {{0, 1}, {1, 2}})).graph ==
          canonical_form(make_graph(3, {{0, 2}, {1, 2}})).graph);
    // a double edge is not a single edge even though adjacency matches
    CHECK(canonical_form(make_graph(2, {{0, 1}, {0, 1}})).graph !=
          canonical_form(make_graph(2, {{0, 1}})).graph);
}

TEST_CASE("orbit size times automorphism count is n!") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testing::random_multigraph(rng, 5, 6);
        const int n = g.vertex_count();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::set<Graph> orbit;
        long automorphisms = 0;
        long factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        const Graph canon = canonical_form(g).graph;
        do {
            const Graph h = testing::relabel(g, perm);
            orbit.insert(h);
            if (h == g) ++automorphisms;
            CHECK(canonical_form(h).graph == canon);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(static_cast<long>(orbit.size()) * automorphisms == factorial);
    }
}

TEST_CASE("isomorphism classes bucket by canonical form") {
    CHECK(isomorphism_classes({}).total == 0);
    CHECK(isomorphism_classes({}).classes.empty());

    const auto cycles = enumerate_graphs(GraphSpace::simple(), {2, 2, 2, 2, 2});
    const auto classes = isomorphism_classes(cycles);
    CHECK(classes.total == 12);
    REQUIRE(classes.classes.size() == 1);
    CHECK(classes.classes[0].size == 12);

    const auto mixed = enumerate_graphs(GraphSpace::simple(), {2, 2, 2, 2, 2, 2});
    const auto mixed_classes = isomorphism_classes(mixed);
    CHECK(mixed_classes.total == 70);  // 60 hexagons + 10 pairs of triangles
    REQUIRE(mixed_classes.classes.size() == 2);
    std::vector<std::size_t> sizes{mixed_classes.classes[0].size, mixed_classes.classes[1].size};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{10, 60});
}
