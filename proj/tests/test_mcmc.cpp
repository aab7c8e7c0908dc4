#include "doctest.h"

#include <cmath>
#include <map>

#include "helpers.hpp"
#include "swapmc/enumerate.hpp"
#include "swapmc/mcmc.hpp"

using namespace swapmc;
using testing::make_graph;

namespace {

// Classifies every proposal of g by brute force.
struct ProposalCensus {
    std::map<Graph, long> neighbor_multiplicity;
    long identity = 0;
    long invalid = 0;
    long total = 0;
};

ProposalCensus classify_proposals(const Graph& g, const GraphSpace& s) {
    ProposalCensus census;
    const int m = g.edge_count();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (Pairing p : {Pairing::CrossA, Pairing::CrossB}) {
                ++census.total;
                const Graph h = apply_double_swap(g, {i, j, p});
                if (h == g)
                    ++census.identity;
                else if (!is_valid_in_space(h, s))
                    ++census.invalid;
                else
                    ++census.neighbor_multiplicity[h];
            }
        }
    }
    return census;
}

}  // namespace

TEST_CASE("proposal degeneracy on the defining examples") {
    const Graph g = make_graph(4, {{0, 1}, {2, 3}});
    CHECK(proposal_degeneracy(g, make_graph(4, {{0, 2}, {1, 3}})) == 1);

    const Graph multi = make_graph(4, {{0, 1}, {0, 1}, {2, 3}});
    const Graph target = make_graph(4, {{0, 2}, {1, 3}, {0, 1}});
    CHECK(proposal_degeneracy(multi, target) == 2);
    CHECK(proposal_degeneracy(target, multi) == 1);

    CHECK(proposal_degeneracy(g, make_graph(4, {{0, 1}, {2, 3}})) == 0);  // g == h
    CHECK(proposal_degeneracy(g, make_graph(4, {{0, 1}, {1, 2}})) == 0);  // not a neighbor
}

TEST_CASE("proposal degeneracy matches brute force classification") {
    SplitMix64 rng(51);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = testing::random_multigraph(rng, 5, 7);
        const int m = g.edge_count();
        const auto census = classify_proposals(g, GraphSpace::pseudograph());
        long covered = census.identity + census.invalid;
        for (const auto& [h, mult] : census.neighbor_multiplicity) {
            CHECK(proposal_degeneracy(g, h) == mult);
            covered += mult;
        }
        CHECK(covered == m * (m - 1));  // 2 * C(m, 2)
        CHECK(census.total == m * (m - 1));
    }
}

TEST_CASE("a triangle in simple space is frozen") {
    Chain chain(make_graph(3, {{0, 1}, {0, 2}, {1, 2}}), GraphSpace::simple(), 7);
    chain.run(200);
    CHECK(chain.current() == make_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(chain.accepted() == 0);
    CHECK(chain.steps_taken() == 200);
}

TEST_CASE("the all-loops multiloop graph is frozen") {
    Chain chain(make_graph(3, {{0, 0}, {1, 1}, {2, 2}}), GraphSpace::multiloop_graph(), 7);
    chain.run(200);
    CHECK(chain.current() == make_graph(3, {{0, 0}, {1, 1}, {2, 2}}));
    CHECK(chain.accepted() == 0);
}

TEST_CASE("detailed balance on the two-graph loopy-multigraph space") {
    // degrees (2,1,1): the path 1-0-2 and the loop-plus-edge graph
    const Graph path = make_graph(3, {{0, 1}, {0, 2}});
    const Graph loopy = make_graph(3, {{0, 0}, {1, 2}});
    const auto space = GraphSpace::loopy_multigraph();

    CHECK(enumerate_graphs(space, {2, 1, 1}) == std::vector<Graph>{loopy, path});

    // exact transition probabilities from the proposal classification:
    // every proposal is drawn with probability 1 / (2 C(m,2))
    CHECK(proposal_degeneracy(path, loopy) == 1);
    CHECK(proposal_degeneracy(loopy, path) == 2);
    // path -> loopy: 1 proposal, accepted with min(1, 2/1) = 1 => P = 1/2
    // loopy -> path: 2 proposals, accepted with min(1, 1/2)     => P = 1/2

    const int trials = 40000;
    int path_moves = 0, loopy_moves = 0;
    SplitMix64 seeds(99);
    for (int t = 0; t < trials; ++t) {
        Chain a(path, space, seeds());
        a.step();
        path_moves += a.current() == loopy;
        Chain b(loopy, space, seeds());
        b.step();
        loopy_moves += b.current() == path;
    }
    CHECK(std::abs(path_moves / double(trials) - 0.5) < 0.02);
    CHECK(std::abs(loopy_moves / double(trials) - 0.5) < 0.02);
}

TEST_CASE("corrected kernel is symmetric on a small space") {
    const auto space = GraphSpace::loopy_multigraph();
    const auto census = enumerate_graphs(space, {2, 2, 2});
    REQUIRE(census.size() == 5);
    for (const Graph& g : census) {
        const auto proposals = classify_proposals(g, space);
        for (const auto& [h, mult] : proposals.neighbor_multiplicity) {
            const long forward = proposal_degeneracy(g, h);
            const long reverse = proposal_degeneracy(h, g);
            CHECK(forward == mult);
            // transition probability numerators min(fwd, rev) match both ways
            CHECK(std::min(forward, reverse) == std::min(reverse, forward));
            // empirical sanity: h proposes g back
            CHECK(reverse > 0);
        }
    }
}

TEST_CASE("sampling basics") {
    ChainConfig cfg;
    cfg.space = GraphSpace::loopy_multigraph();
    cfg.burn_in = 10;
    cfg.thin = 2;
    cfg.sample_count = 0;
    cfg.seed = 5;
    const Graph start = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(sample(start, cfg).empty());

    cfg.sample_count = 50;
    const auto a = sample(start, cfg);
    const auto b = sample(start, cfg);
    CHECK(a == b);
    CHECK(a.size() == 50);
    const auto degrees = degree_sequence(start);
    for (const Graph& g : a) {
        CHECK(is_valid_in_space(g, cfg.space));
        CHECK(degree_sequence(g) == degrees);
    }

    cfg.thin = 0;
    CHECK_THROWS_AS(sample(start, cfg), InvalidInput);
    cfg.thin = 1;
    CHECK_THROWS_AS(Chain(make_graph(2, {{0, 0}}), GraphSpace::simple(), 0), InvalidInput);
}

TEST_CASE("chain samples the loopy-multigraph space of (2,2,2) uniformly") {
    const auto space = GraphSpace::loopy_multigraph();
    const auto census = enumerate_graphs(space, {2, 2, 2});
    ChainConfig cfg;
    cfg.space = space;
    cfg.burn_in = default_burn_in(3);
    cfg.thin = 3;
    cfg.sample_count = 30000;
    cfg.seed = 2024;
    const auto samples = sample(census.front(), cfg);
    const auto report = uniformity_report(samples, census);
    CHECK(report.census_size == 5);
    CHECK(report.p_value >= 0.001);
}

TEST_CASE("uniformity report statistics") {
    const Graph a = make_graph(2, {{0, 1}});
    const Graph b = make_graph(2, {{0, 1}, {0, 1}});  // placeholder census member
    const std::vector<Graph> census{a, b};

    std::vector<Graph> all_on_one(100, a);
    const auto skewed = uniformity_report(all_on_one, census);
    CHECK(skewed.statistic == doctest::Approx(100.0));
    CHECK(skewed.p_value < 1e-20);

    std::vector<Graph> balanced(50, a);
    balanced.insert(balanced.end(), 50, b);
    CHECK(uniformity_report(balanced, census).statistic == doctest::Approx(0.0));

    CHECK_THROWS_AS(uniformity_report({make_graph(2, {{0, 0}})}, census), SampleOutsideCensus);
}

TEST_CASE("chi-square calibration on simulated uniform draws") {
    // five-graph census, 1000 draws per trial: p >= 0.001 in at least 99%
    const auto census = enumerate_graphs(GraphSpace::loopy_multigraph(), {2, 2, 2});
    REQUIRE(census.size() == 5);
    SplitMix64 rng(61);
    int failures = 0;
    const int trials = 400;
    for (int t = 0; t < trials; ++t) {
        std::vector<Graph> draws;
        draws.reserve(1000);
        for (int i = 0; i < 1000; ++i) draws.push_back(census[rng.bounded(census.size())]);
        if (uniformity_report(draws, census).p_value < 0.001) ++failures;
    }
    CHECK(failures <= trials / 100);
}

TEST_CASE("default burn-in heuristic") {
    CHECK(default_burn_in(1) == 1000);
    CHECK(default_burn_in(10) == static_cast<long>(20.0 * 10 * std::log(10.0)) + 1000);
}
