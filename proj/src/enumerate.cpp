#include "swapmc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <cstdint>
#include <thread>

namespace swapmc {

bool EnumFilter::passes(const Graph& g) const {
    if (triangle_count && swapmc::triangle_count(g) != *triangle_count) return false;
    if (triangle_seq && swapmc::triangle_sequence(g) != *triangle_seq) return false;
    if (custom && !custom(g)) return false;
    return true;
}

void validate_filter(const GraphSpace& s, const EnumFilter& f, std::size_t n) {
    if (!f.has_triangle_filter()) return;
    if (s != GraphSpace::simple())
        throw FilterInapplicable("triangle filters apply to the simple space only");
    if (n > 64) throw InvalidInput("triangle filters support at most 64 vertices");
    if (f.triangle_seq && f.triangle_seq->size() != n)
        throw InvalidInput("triangle sequence length must match the degree sequence");
    if (f.triangle_seq) validate_triangle_sequence(*f.triangle_seq);
    if (f.triangle_count && *f.triangle_count < 0)
        throw InvalidInput("triangle count target must be non-negative");
}

namespace {

// Backtracking census search. Repeatedly settles the vertex with the
// largest residual degree by assigning its whole remaining multiset of
// partners, so each labeled graph is generated along exactly one path.
class CensusSearch {
  public:
    CensusSearch(const GraphSpace& space, const DegreeSequence& target, const EnumFilter& filter,
                 std::atomic<std::size_t>& emitted, std::size_t cap)
        : space_(space),
          target_(target),
          filter_(filter),
          emitted_(emitted),
          cap_(cap),
          n_(static_cast<int>(target.size())),
          residual_(target),
          tri_tracking_(filter.has_triangle_filter()),
          tri_total_target_(filter.triangle_count ? *filter.triangle_count : -1),
          tri_seq_(filter.triangle_seq ? &*filter.triangle_seq : nullptr) {
        if (tri_tracking_) {
            adj_.assign(n_, 0);
            tri_closed_.assign(n_, 0);
        }
    }

    void replay(const std::vector<Edge>& prefix) {
        for (const Edge& e : prefix) add_edge(e.first, e.second);
    }

    void run(std::vector<Graph>& out) {
        out_ = &out;
        search();
    }

    // Enumerate only the first settled vertex's choices, as edge prefixes.
    void first_level(std::vector<std::vector<Edge>>& prefixes) {
        prefixes_ = &prefixes;
        search();
    }

  private:
    const GraphSpace space_;
    const DegreeSequence& target_;
    const EnumFilter& filter_;
    std::atomic<std::size_t>& emitted_;
    const std::size_t cap_;
    const int n_;

    std::vector<int> residual_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;  // simple-space adjacency, one word per vertex
    std::vector<long> tri_closed_;
    long tri_total_ = 0;

    const bool tri_tracking_;
    const long tri_total_target_;
    const std::vector<int>* tri_seq_;

    std::vector<Graph>* out_ = nullptr;
    std::vector<std::vector<Edge>>* prefixes_ = nullptr;
    int steps_done_ = 0;

    bool add_edge(int u, int v) {
        edges_.push_back(make_edge(u, v));
        residual_[u] -= (u == v) ? 2 : 1;
        if (u != v) residual_[v] -= 1;
        if (!tri_tracking_ || u == v) return true;
        const std::uint64_t common = adj_[u] & adj_[v];
        adj_[u] |= 1ULL << v;
        adj_[v] |= 1ULL << u;
        const int closed = std::popcount(common);
        tri_total_ += closed;
        tri_closed_[u] += closed;
        tri_closed_[v] += closed;
        bool ok = tri_total_target_ < 0 || tri_total_ <= tri_total_target_;
        if (tri_seq_) {
            ok = ok && tri_closed_[u] <= (*tri_seq_)[u] && tri_closed_[v] <= (*tri_seq_)[v];
            for (std::uint64_t rest = common; rest; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                if (++tri_closed_[w] > (*tri_seq_)[w]) ok = false;
            }
        } else {
            for (std::uint64_t rest = common; rest; rest &= rest - 1)
                ++tri_closed_[std::countr_zero(rest)];
        }
        return ok;
    }

    void remove_edge() {
        const Edge e = edges_.back();
        edges_.pop_back();
        const auto [u, v] = e;
        residual_[u] += (u == v) ? 2 : 1;
        if (u != v) residual_[v] += 1;
        if (!tri_tracking_ || u == v) return;
        adj_[u] &= ~(1ULL << v);
        adj_[v] &= ~(1ULL << u);
        const std::uint64_t common = adj_[u] & adj_[v];
        const int closed = std::popcount(common);
        tri_total_ -= closed;
        tri_closed_[u] -= closed;
        tri_closed_[v] -= closed;
        for (std::uint64_t rest = common; rest; rest &= rest - 1)
            --tri_closed_[std::countr_zero(rest)];
    }

    int pick_vertex() const {
        int best = -1;
        for (int v = 0; v < n_; ++v)
            if (residual_[v] > 0 && (best < 0 || residual_[v] > residual_[best])) best = v;
        return best;
    }

    long loop_allowance(int v) const {
        switch (space_.loops) {
            case LoopPolicy::Forbidden: return 0;
            case LoopPolicy::SingleOnly: return 1;
            case LoopPolicy::Unlimited: return residual_[v] / 2;
        }
        return 0;
    }

    // Upper bound on what each open vertex can still absorb.
    bool residuals_feasible() const {
        long open_sum = 0;
        int open_count = 0;
        for (int v = 0; v < n_; ++v)
            if (residual_[v] > 0) {
                open_sum += residual_[v];
                ++open_count;
            }
        for (int v = 0; v < n_; ++v) {
            const int r = residual_[v];
            if (r <= 0) continue;
            long cap = 2 * loop_allowance(v);
            if (space_.multiedges == MultiedgePolicy::Unlimited)
                cap += open_sum - r;
            else
                cap += open_count - 1;
            if (r > cap) return false;
        }
        return true;
    }

    // Final graphs are subgraphs of the possibility graph (current edges
    // plus every still-addable pair), so its triangle statistics bound
    // what any completion can reach.
    bool triangles_reachable() const {
        if (!tri_tracking_) return true;
        std::uint64_t open = 0;
        for (int v = 0; v < n_; ++v)
            if (residual_[v] > 0) open |= 1ULL << v;
        std::vector<std::uint64_t> possible(n_);
        for (int v = 0; v < n_; ++v) {
            possible[v] = adj_[v];
            if (open & (1ULL << v)) possible[v] |= open & ~(1ULL << v);
        }
        long six_times_total = 0;
        for (int a = 0; a < n_; ++a) {
            long twice = 0;
            for (std::uint64_t rest = possible[a]; rest; rest &= rest - 1)
                twice += std::popcount(possible[a] & possible[std::countr_zero(rest)]);
            if (tri_seq_ && twice < 2L * (*tri_seq_)[a]) return false;
            six_times_total += twice;
        }
        if (tri_total_target_ >= 0 && six_times_total < 6 * tri_total_target_) return false;
        return true;
    }

    void emit() {
        if (tri_total_target_ >= 0 && tri_total_ != tri_total_target_) return;
        if (tri_seq_) {
            for (int v = 0; v < n_; ++v)
                if (tri_closed_[v] != (*tri_seq_)[v]) return;
        }
        std::vector<Edge> sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        Graph g = graph_from_sorted_edges(n_, std::move(sorted));
        if (filter_.custom && !filter_.custom(g)) return;
        if (emitted_.fetch_add(1) >= cap_) throw CensusTooLarge("census exceeds the configured cap");
        out_->push_back(std::move(g));
    }

    void search() {
        const int u = pick_vertex();
        if (u < 0) {
            if (prefixes_) prefixes_->push_back(edges_);  // graph complete before first split
            else emit();
            return;
        }
        if (prefixes_ && steps_done_ == 1) {
            prefixes_->push_back(edges_);
            return;
        }

        std::vector<int> partners;
        for (int v = 0; v < n_; ++v)
            if (v != u && residual_[v] > 0) partners.push_back(v);
        std::vector<long> suffix_cap(partners.size() + 1, 0);
        for (int i = static_cast<int>(partners.size()) - 1; i >= 0; --i) {
            const int v = partners[i];
            const long cap = space_.multiedges == MultiedgePolicy::Unlimited ? residual_[v] : 1;
            suffix_cap[i] = suffix_cap[i + 1] + cap;
        }

        const long max_loops = std::min<long>(loop_allowance(u), residual_[u] / 2);
        for (long c = 0; c <= max_loops; ++c) {
            if (c > 0) add_edge(u, u);
            assign_partners(u, partners, suffix_cap, 0, residual_[u]);
        }
        for (long c = 0; c < max_loops; ++c) remove_edge();
    }

    void assign_partners(int u, const std::vector<int>& partners, const std::vector<long>& suffix_cap,
                         std::size_t idx, int r_left) {
        if (r_left == 0) {
            if (!residuals_feasible() || !triangles_reachable()) return;
            ++steps_done_;
            search();
            --steps_done_;
            return;
        }
        if (idx >= partners.size() || r_left > suffix_cap[idx]) return;
        const int v = partners[idx];
        const long cap = space_.multiedges == MultiedgePolicy::Unlimited
                             ? std::min<long>(residual_[v], r_left)
                             : std::min<long>({1, static_cast<long>(residual_[v]), static_cast<long>(r_left)});
        assign_partners(u, partners, suffix_cap, idx + 1, r_left);
        long added = 0;
        for (long c = 1; c <= cap; ++c) {
            ++added;
            if (!add_edge(u, v)) break;  // triangle overshoot only worsens with more edges
            assign_partners(u, partners, suffix_cap, idx + 1, r_left - static_cast<int>(c));
        }
        for (long c = 0; c < added; ++c) remove_edge();
    }
};

}  // namespace

std::vector<Graph> enumerate_graphs(const GraphSpace& s, const DegreeSequence& d, const EnumFilter& f,
                                    std::size_t max_results, unsigned jobs) {
    validate_degree_sequence(d);
    validate_filter(s, f, d.size());

    std::atomic<std::size_t> emitted{0};
    std::vector<Graph> out;
    if (jobs <= 1) {
        CensusSearch search(s, d, f, emitted, max_results);
        search.run(out);
    } else {
        std::vector<std::vector<Edge>> prefixes;
        {
            CensusSearch splitter(s, d, f, emitted, max_results);
            splitter.first_level(prefixes);
        }
        // Complete graphs can reach the splitter with no step left; they
        // re-emit during replay below, so reset the counter.
        emitted = 0;
        std::vector<std::vector<Graph>> results(prefixes.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> overflow{false};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= prefixes.size() || overflow.load()) return;
                try {
                    CensusSearch search(s, d, f, emitted, max_results);
                    search.replay(prefixes[i]);
                    search.run(results[i]);
                } catch (const CensusTooLarge&) {
                    overflow.store(true);
                    return;
                }
            }
        };
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        if (overflow.load()) throw CensusTooLarge("census exceeds the configured cap");
        for (auto& part : results)
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(out.begin(), out.end());
    assert(std::adjacent_find(out.begin(), out.end()) == out.end());
    return out;
}

}  // namespace swapmc
