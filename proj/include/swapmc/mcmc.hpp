#pragma once

#include <cstdint>
#include <vector>

#include "swapmc/graph.hpp"
#include "swapmc/rng.hpp"
#include "swapmc/swaps.hpp"

namespace swapmc {

// Number of distinct proposals (unordered instance pair + non-identity
// pairing) on g whose application yields h; 0 when h is not a
// double-swap neighbor of g.
long proposal_degeneracy(const Graph& g, const Graph& h);

struct ChainConfig {
    GraphSpace space;
    long burn_in = 0;
    long thin = 1;
    long sample_count = 0;
    std::uint64_t seed = 0;
};

// Heuristic default: 20 m ln(m) + 1000. The default thinning interval is m.
long default_burn_in(int edge_count);

// Double edge-swap Metropolis-Hastings chain with uniform stationary
// distribution on each connected component of the gog: proposals are a
// uniform unordered instance pair and a uniform non-identity pairing;
// invalid or identical results hold in place, and accepted moves use
// min(1, degeneracy(h,g)/degeneracy(g,h)).
class Chain {
  public:
    Chain(Graph start, const GraphSpace& space, std::uint64_t seed);

    void step();
    void run(long steps);

    const Graph& current() const { return current_; }
    const GraphSpace& space() const { return space_; }
    long steps_taken() const { return steps_; }
    long accepted() const { return accepted_; }

  private:
    GraphSpace space_;
    Graph current_;
    SplitMix64 rng_;
    long steps_ = 0;
    long accepted_ = 0;
    std::vector<Edge> scratch_;
};

// burn_in steps, then every thin-th state until sample_count graphs are
// retained. Deterministic per seed.
std::vector<Graph> sample(const Graph& g0, const ChainConfig& cfg);

struct UniformityReport {
    double statistic = 0;     // chi-square against the uniform census distribution
    double p_value = 1;
    std::size_t census_size = 0;
    std::size_t sample_count = 0;
};

UniformityReport uniformity_report(const std::vector<Graph>& samples, const std::vector<Graph>& census);

}  // namespace swapmc
