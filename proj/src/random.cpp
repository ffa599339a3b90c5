#include "qgraph/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qgraph {

Pcg32::Pcg32(std::uint64_t seed, std::uint64_t stream) {
    inc_ = (stream << 1u) | 1u;
    next();
    state_ += seed;
    next();
}

std::uint32_t Pcg32::next() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
}

std::uint32_t Pcg32::bounded(std::uint32_t bound) {
    const std::uint32_t threshold = (-bound) % bound;
    for (;;) {
        const std::uint32_t r = next();
        if (r >= threshold) return r % bound;
    }
}

double Pcg32::uniform() {
    const std::uint64_t hi = next() >> 5;  // 27 bits
    const std::uint64_t lo = next() >> 6;  // 26 bits
    return static_cast<double>((hi << 26) | lo) * 0x1.0p-53;
}

namespace {

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    int components = n;
    for (auto [u, v] : edges) {
        const int a = find(u), b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

} // namespace

DiscreteGraph random_connected_graph(Pcg32& rng, int min_v, int max_v, double p_lo, double p_hi) {
    if (min_v < 2 || max_v < min_v) throw std::invalid_argument("random_connected_graph: need 2 <= min_v <= max_v");
    const int n = min_v + static_cast<int>(rng.bounded(static_cast<std::uint32_t>(max_v - min_v + 1)));
    const double p = rng.uniform(p_lo, p_hi);
    std::vector<std::pair<int, int>> edges;
    do {
        edges.clear();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.uniform() < p) edges.emplace_back(u, v);
    } while (!connected(n, edges));
    return build_graph(n, edges);
}

std::vector<double> random_lengths(Pcg32& rng, const DiscreteGraph& g, double length, double delta) {
    std::vector<double> out(static_cast<std::size_t>(g.edge_count()));
    for (double& l : out) l = length + delta * rng.uniform();
    return out;
}

namespace {

// Adjacency as a bit set over the pairs (u, v), u < v, of an n-vertex graph.
using Code = std::uint64_t;

int pair_bit(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

/// Smallest code over the relabellings that list vertices by non-increasing
/// degree. That set of relabellings is isomorphism invariant, so the minimum
/// is a canonical form.
Code canonical_code(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(u)] += adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return degree[static_cast<std::size_t>(a)] != degree[static_cast<std::size_t>(b)]
                   ? degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]
                   : a < b;
    });

    // permute within each block of equal degree
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && degree[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                            degree[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    Code best = ~Code{0};
    auto evaluate = [&] {
        Code c = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (adj[static_cast<std::size_t>(order[static_cast<std::size_t>(a)])][static_cast<std::size_t>(order[static_cast<std::size_t>(b)])])
                    c |= Code{1} << pair_bit(a, b, n);
        best = std::min(best, c);
    };
    auto recurse = [&](auto& self, std::size_t block) -> void {
        if (block == blocks.size()) {
            evaluate();
            return;
        }
        auto first = order.begin() + blocks[block].first;
        auto last = order.begin() + blocks[block].second;
        std::sort(first, last);
        do {
            self(self, block + 1);
        } while (std::next_permutation(first, last));
    };
    recurse(recurse, 0);
    return best;
}

std::vector<std::vector<bool>> decode(Code code, int n) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (code >> pair_bit(u, v, n) & 1u) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    return adj;
}

} // namespace

std::vector<DiscreteGraph> connected_graph_catalog(int max_v) {
    if (max_v > 8) throw std::invalid_argument("connected_graph_catalog supports at most 8 vertices");
    std::vector<DiscreteGraph> out;
    if (max_v < 2) return out;

    // Every connected graph has a vertex whose removal leaves it connected
    // (a leaf of a spanning tree), so adding one vertex to each connected
    // graph on n-1 vertices in every possible way reaches all of them.
    std::set<Code> level = {canonical_code(decode(1, 2))};
    for (int n = 2;; ++n) {
        for (Code code : level) {
            const auto adj = decode(code, n);
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
            out.push_back(build_graph(n, edges));
        }
        if (n == max_v) break;

        std::set<Code> next;
        for (Code code : level) {
            auto adj = decode(code, n);
            for (auto& row : adj) row.push_back(false);
            adj.emplace_back(static_cast<std::size_t>(n + 1), false);
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                for (int u = 0; u < n; ++u) {
                    const bool on = mask >> u & 1u;
                    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(n)] = on;
                    adj[static_cast<std::size_t>(n)][static_cast<std::size_t>(u)] = on;
                }
                next.insert(canonical_code(adj));
            }
        }
        level = std::move(next);
    }
    return out;
}

} // namespace qgraph
