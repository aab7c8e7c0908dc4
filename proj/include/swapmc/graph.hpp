#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "swapmc/errors.hpp"

namespace swapmc {

// An edge instance, stored with first <= second; a loop is (u,u).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u <= v ? Edge{u, v} : Edge{v, u}; }
inline bool is_loop(const Edge& e) { return e.first == e.second; }

enum class LoopPolicy { Forbidden, SingleOnly, Unlimited };
enum class MultiedgePolicy { SingleOnly, Unlimited };

// One of the six graph spaces between simple graphs and pseudographs.
struct GraphSpace {
    LoopPolicy loops = LoopPolicy::Forbidden;
    MultiedgePolicy multiedges = MultiedgePolicy::SingleOnly;

    bool operator==(const GraphSpace&) const = default;

    std::string name() const;
    static GraphSpace from_name(const std::string& name);  // throws InvalidInput

    static constexpr GraphSpace simple() { return {LoopPolicy::Forbidden, MultiedgePolicy::SingleOnly}; }
    static constexpr GraphSpace multigraph() { return {LoopPolicy::Forbidden, MultiedgePolicy::Unlimited}; }
    static constexpr GraphSpace loopy_graph() { return {LoopPolicy::SingleOnly, MultiedgePolicy::SingleOnly}; }
    static constexpr GraphSpace loopy_multigraph() { return {LoopPolicy::SingleOnly, MultiedgePolicy::Unlimited}; }
    static constexpr GraphSpace multiloop_graph() { return {LoopPolicy::Unlimited, MultiedgePolicy::SingleOnly}; }
    static constexpr GraphSpace pseudograph() { return {LoopPolicy::Unlimited, MultiedgePolicy::Unlimited}; }

    static const std::array<GraphSpace, 6>& all();
};

// Immutable labeled multigraph: vertex count plus a sorted list of edge
// instances. Multiedges are repeated instances; a loop at u counts 2
// toward the degree of u.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);  // normalizes and sorts; checks endpoints

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // (n, sorted edge list) lexicographic: the canonical census order.
    auto operator<=>(const Graph&) const = default;

    std::size_t hash() const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;

    friend Graph graph_from_sorted_edges(int n, std::vector<Edge>&& edges);
};

// Trusted fast path: `edges` must already be normalized and sorted.
Graph graph_from_sorted_edges(int n, std::vector<Edge>&& edges);

struct GraphHash {
    std::size_t operator()(const Graph& g) const { return g.hash(); }
};

std::size_t hash_edge_list(int n, const std::vector<Edge>& edges);

using DegreeSequence = std::vector<int>;
using TriangleSequence = std::vector<int>;
using GraphPredicate = std::function<bool(const Graph&)>;

DegreeSequence degree_sequence(const Graph& g);
void validate_degree_sequence(const DegreeSequence& d);      // positive entries, even sum
void validate_triangle_sequence(const TriangleSequence& t);  // non-negative, sum divisible by 3

bool is_simple(const Graph& g);
bool is_valid_in_space(const Graph& g, const GraphSpace& s);
bool edge_list_valid_in_space(const std::vector<Edge>& sorted_edges, const GraphSpace& s);

long triangle_count(const Graph& g);                 // throws NonSimpleGraph
TriangleSequence triangle_sequence(const Graph& g);  // throws NonSimpleGraph

// Text format: first line "n m", then m lines "u v" (loops as "u u",
// multiedges as repeated lines).
std::string serialize(const Graph& g);
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

}  // namespace swapmc
