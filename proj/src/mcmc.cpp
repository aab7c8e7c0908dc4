#include "swapmc/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <boost/math/distributions/chi_squared.hpp>

namespace swapmc {

namespace {

long instance_multiplicity(const Graph& g, const Edge& e) {
    const auto range = std::equal_range(g.edges().begin(), g.edges().end(), e);
    return range.second - range.first;
}

}  // namespace

long proposal_degeneracy(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return 0;
    if (g == h) return 0;

    // multiset difference of the sorted instance lists
    std::vector<Edge> removed, added;
    const auto& ge = g.edges();
    const auto& he = h.edges();
    std::set_difference(ge.begin(), ge.end(), he.begin(), he.end(), std::back_inserter(removed));
    std::set_difference(he.begin(), he.end(), ge.begin(), ge.end(), std::back_inserter(added));
    if (removed.size() != 2 || added.size() != 2) return 0;

    const Edge d1 = removed[0], d2 = removed[1];
    long index_pairs;
    if (d1 == d2) {
        const long mult = instance_multiplicity(g, d1);
        index_pairs = mult * (mult - 1) / 2;
    } else {
        index_pairs = instance_multiplicity(g, d1) * instance_multiplicity(g, d2);
    }

    auto matches = [&](Edge a, Edge b) {
        if (b < a) std::swap(a, b);
        return a == added[0] && b == added[1];
    };
    long pairings = 0;
    if (matches(make_edge(d1.first, d2.first), make_edge(d1.second, d2.second))) ++pairings;
    if (matches(make_edge(d1.first, d2.second), make_edge(d1.second, d2.first))) ++pairings;
    return index_pairs * pairings;
}

long default_burn_in(int edge_count) {
    if (edge_count < 2) return 1000;
    const double m = edge_count;
    return static_cast<long>(20.0 * m * std::log(m)) + 1000;
}

Chain::Chain(Graph start, const GraphSpace& space, std::uint64_t seed)
    : space_(space), current_(std::move(start)), rng_(seed) {
    if (!is_valid_in_space(current_, space_))
        throw InvalidInput("start graph is not valid in the configured space");
}

void Chain::step() {
    ++steps_;
    const int m = current_.edge_count();
    if (m < 2) return;

    // draw order: instance i, companion j, pairing, then (only when the
    // acceptance ratio is below one) the acceptance variate
    const int i = static_cast<int>(rng_.bounded(m));
    int j = static_cast<int>(rng_.bounded(m - 1));
    if (j >= i) ++j;
    const Pairing p = rng_.bounded(2) == 0 ? Pairing::CrossA : Pairing::CrossB;

    const Edge a = current_.edges()[i];
    const Edge b = current_.edges()[j];
    scratch_ = current_.edges();
    if (p == Pairing::CrossA) {
        scratch_[i] = make_edge(a.first, b.first);
        scratch_[j] = make_edge(a.second, b.second);
    } else {
        scratch_[i] = make_edge(a.first, b.second);
        scratch_[j] = make_edge(a.second, b.first);
    }
    std::sort(scratch_.begin(), scratch_.end());
    if (scratch_ == current_.edges()) return;                      // lazy hold
    if (!edge_list_valid_in_space(scratch_, space_)) return;       // rejected proposal

    Graph h = graph_from_sorted_edges(current_.vertex_count(), std::vector<Edge>(scratch_));
    const long forward = proposal_degeneracy(current_, h);
    const long reverse = proposal_degeneracy(h, current_);
    if (reverse < forward &&
        rng_.uniform01() >= static_cast<double>(reverse) / static_cast<double>(forward))
        return;
    current_ = std::move(h);
    ++accepted_;
}

void Chain::run(long steps) {
    for (long s = 0; s < steps; ++s) step();
}

std::vector<Graph> sample(const Graph& g0, const ChainConfig& cfg) {
    if (cfg.burn_in < 0 || cfg.thin < 1 || cfg.sample_count < 0)
        throw InvalidInput("chain config requires burn_in >= 0, thin >= 1, sample_count >= 0");
    Chain chain(g0, cfg.space, cfg.seed);
    chain.run(cfg.burn_in);
    std::vector<Graph> samples;
    samples.reserve(static_cast<std::size_t>(cfg.sample_count));
    for (long s = 0; s < cfg.sample_count; ++s) {
        chain.run(cfg.thin);
        samples.push_back(chain.current());
    }
    return samples;
}

UniformityReport uniformity_report(const std::vector<Graph>& samples, const std::vector<Graph>& census) {
    std::unordered_map<Graph, std::size_t, GraphHash> index;
    index.reserve(census.size());
    for (std::size_t i = 0; i < census.size(); ++i) index.emplace(census[i], i);
    std::vector<long> counts(census.size(), 0);
    for (const Graph& g : samples) {
        const auto it = index.find(g);
        if (it == index.end()) throw SampleOutsideCensus("sample does not appear in the census");
        ++counts[it->second];
    }

    UniformityReport report;
    report.census_size = census.size();
    report.sample_count = samples.size();
    if (census.size() < 2 || samples.empty()) return report;

    const double expected = static_cast<double>(samples.size()) / static_cast<double>(census.size());
    double stat = 0;
    for (long c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    report.statistic = stat;
    boost::math::chi_squared dist(static_cast<double>(census.size() - 1));
    report.p_value = boost::math::cdf(boost::math::complement(dist, stat));
    return report;
}

}  // namespace swapmc
