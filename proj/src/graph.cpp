#include "qgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "qgraph/error.hpp"

namespace qgraph {

std::optional<int> DiscreteGraph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return std::nullopt;
    for (int e : incident_[static_cast<std::size_t>(u)]) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.u == v || ed.v == v) return e;
    }
    return std::nullopt;
}

DiscreteGraph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list) {
    if (vertex_count < 2) {
        throw Error(ErrorCode::TooFewVertices,
                    "graph needs at least 2 vertices, got " + std::to_string(vertex_count));
    }

    DiscreteGraph g;
    g.vertex_count_ = vertex_count;
    g.neighbors_.resize(static_cast<std::size_t>(vertex_count));
    g.incident_.resize(static_cast<std::size_t>(vertex_count));

    std::set<Edge> seen;
    for (auto [a, b] : edge_list) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
            throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                         ") outside 0.." + std::to_string(vertex_count - 1));
        }
        if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
        const Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) {
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        const int index = static_cast<int>(g.edges_.size());
        g.edges_.push_back(e);
        g.neighbors_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.neighbors_[static_cast<std::size_t>(e.v)].push_back(e.u);
        g.incident_[static_cast<std::size_t>(e.u)].push_back(index);
        g.incident_[static_cast<std::size_t>(e.v)].push_back(index);
    }

    const auto dist = bfs_distances(g, 0);
    const auto unreached = std::find(dist.begin(), dist.end(), -1);
    if (unreached != dist.end()) {
        throw Error(ErrorCode::Disconnected,
                    "vertex " + std::to_string(unreached - dist.begin()) + " not reachable from vertex 0");
    }
    return g;
}

std::vector<int> bfs_distances(const DiscreteGraph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

GraphShape shape(const DiscreteGraph& g) {
    GraphShape s;
    s.betti = g.edge_count() - g.vertex_count() + 1;
    s.degree_sequence.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        s.degree_sequence[static_cast<std::size_t>(v)] = g.degree(v);
        s.max_degree = std::max(s.max_degree, g.degree(v));
        const auto dist = bfs_distances(g, v);
        s.diameter = std::max(s.diameter, *std::max_element(dist.begin(), dist.end()));
    }
    return s;
}

MetricGraph attach_lengths(DiscreteGraph g, std::span<const double> lengths) {
    if (lengths.size() != static_cast<std::size_t>(g.edge_count())) {
        throw Error(ErrorCode::MissingLength, "expected " + std::to_string(g.edge_count()) + " edge lengths, got " +
                                                  std::to_string(lengths.size()));
    }
    for (std::size_t e = 0; e < lengths.size(); ++e) {
        if (!(lengths[e] > 0.0) || !std::isfinite(lengths[e])) {
            throw Error(ErrorCode::NonpositiveLength,
                        "edge " + std::to_string(e) + " has non-positive length " + std::to_string(lengths[e]));
        }
    }
    MetricGraph mg(std::move(g));
    mg.lengths_.assign(lengths.begin(), lengths.end());
    mg.total_length_ = std::accumulate(lengths.begin(), lengths.end(), 0.0);
    const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
    mg.min_length_ = *lo;
    mg.max_length_ = *hi;
    return mg;
}

MetricGraph equilateral(DiscreteGraph g, double length) {
    const std::vector<double> lengths(static_cast<std::size_t>(g.edge_count()), length);
    return attach_lengths(std::move(g), lengths);
}

std::optional<int> regular_degree(const DiscreteGraph& g) {
    const int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) {
        if (g.degree(v) != d) return std::nullopt;
    }
    return d;
}

bool is_star(const DiscreteGraph& g) {
    // connected with E = V - 1 and a vertex adjacent to all others
    if (g.edge_count() != g.vertex_count() - 1) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == g.edge_count()) return true;
    }
    return false;
}

bool is_bipartite(const DiscreteGraph& g) {
    const auto dist = bfs_distances(g, 0);
    for (const Edge& e : g.edges())
        if (dist[static_cast<std::size_t>(e.u)] % 2 == dist[static_cast<std::size_t>(e.v)] % 2) return false;
    return true;
}

int max_edge_degree_sum(const DiscreteGraph& g) {
    int best = 0;
    for (const Edge& e : g.edges()) best = std::max(best, g.degree(e.u) + g.degree(e.v));
    return best;
}

DiscreteGraph relabel(const DiscreteGraph& g, std::span<const int> perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    }
    return build_graph(g.vertex_count(), edges);
}

DiscreteGraph path_graph(int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < vertex_count; ++v) edges.emplace_back(v, v + 1);
    return build_graph(vertex_count, edges);
}

DiscreteGraph cycle_graph(int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < vertex_count; ++v) edges.emplace_back(v, (v + 1) % vertex_count);
    return build_graph(vertex_count, edges);
}

DiscreteGraph complete_graph(int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v) edges.emplace_back(u, v);
    return build_graph(vertex_count, edges);
}

DiscreteGraph complete_bipartite(int m, int p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + p; ++v) edges.emplace_back(u, v);
    return build_graph(m + p, edges);
}

DiscreteGraph star_graph(int edge_count) { return complete_bipartite(1, edge_count); }

} // namespace qgraph
