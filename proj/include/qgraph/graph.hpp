#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qgraph {

/// Undirected edge stored as (u, v) with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite, simple, connected graph on vertices 0..V-1.
///
/// Instances only come out of build_graph(), which enforces simplicity and
/// connectivity; nothing downstream re-checks either property. Edge order is
/// the order the edges were supplied in, so edge indices are stable keys for
/// per-edge data such as lengths.
class DiscreteGraph {
public:
    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

    std::span<const int> neighbors(int v) const { return neighbors_.at(static_cast<std::size_t>(v)); }
    /// Indices (into edges()) of the edges incident to v.
    std::span<const int> incident_edges(int v) const { return incident_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors_.at(static_cast<std::size_t>(v)).size()); }

    /// Edge index of {u, v}, if the vertices are adjacent.
    std::optional<int> edge_index(int u, int v) const;

    friend DiscreteGraph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list);

private:
    DiscreteGraph() = default;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::vector<int>> incident_;
};

/// Validates and builds a graph. Throws Error with TooFewVertices,
/// VertexOutOfRange, SelfLoop, DuplicateEdge or Disconnected.
DiscreteGraph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list);

inline DiscreteGraph build_graph(int vertex_count, std::initializer_list<std::pair<int, int>> edge_list) {
    return build_graph(vertex_count, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

struct GraphShape {
    int betti = 0;      ///< E - V + 1
    int diameter = 0;   ///< in the edge-count metric
    std::vector<int> degree_sequence;  ///< indexed by vertex
    int max_degree = 0;
};

GraphShape shape(const DiscreteGraph& g);

/// Hop distances from `source` to every vertex.
std::vector<int> bfs_distances(const DiscreteGraph& g, int source);

/// A discrete graph with a positive length on every edge (indexed like g.edges()).
class MetricGraph {
public:
    const DiscreteGraph& graph() const noexcept { return graph_; }
    std::span<const double> lengths() const noexcept { return lengths_; }
    double length(int edge_index) const { return lengths_.at(static_cast<std::size_t>(edge_index)); }

    double total_length() const noexcept { return total_length_; }
    double min_length() const noexcept { return min_length_; }
    double max_length() const noexcept { return max_length_; }
    /// Exact comparison of the supplied values.
    bool is_equilateral() const noexcept { return min_length_ == max_length_; }

    friend MetricGraph attach_lengths(DiscreteGraph g, std::span<const double> lengths);

private:
    explicit MetricGraph(DiscreteGraph g) : graph_(std::move(g)) {}

    DiscreteGraph graph_;
    std::vector<double> lengths_;
    double total_length_ = 0.0;
    double min_length_ = 0.0;
    double max_length_ = 0.0;
};

/// Throws MissingLength when the count does not match E, NonpositiveLength
/// for any length <= 0 (or non-finite).
MetricGraph attach_lengths(DiscreteGraph g, std::span<const double> lengths);

inline MetricGraph attach_lengths(DiscreteGraph g, std::initializer_list<double> lengths) {
    return attach_lengths(std::move(g), std::span<const double>(lengths.begin(), lengths.size()));
}

MetricGraph equilateral(DiscreteGraph g, double length);

// Structural predicates.
std::optional<int> regular_degree(const DiscreteGraph& g);
bool is_star(const DiscreteGraph& g);

bool is_bipartite(const DiscreteGraph& g);
/// max over edges (u,v) of d_u + d_v
int max_edge_degree_sum(const DiscreteGraph& g);

/// Same graph with vertex v renamed to perm[v].
DiscreteGraph relabel(const DiscreteGraph& g, std::span<const int> perm);

// Standard families.
DiscreteGraph path_graph(int vertex_count);
DiscreteGraph cycle_graph(int vertex_count);
DiscreteGraph complete_graph(int vertex_count);
/// Vertices 0..m-1 on one side, m..m+p-1 on the other.
DiscreteGraph complete_bipartite(int m, int p);
/// Centre 0 with leaves 1..edge_count.
DiscreteGraph star_graph(int edge_count);

} // namespace qgraph
