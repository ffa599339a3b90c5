#include "qgraph/spanning_trees.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qgraph/error.hpp"
#include "qgraph/laplacian.hpp"

namespace qgraph {

std::string_view to_string(TreeMethod method) {
    switch (method) {
    case TreeMethod::BruteForce: return "brute_force";
    case TreeMethod::Minor: return "matrix_tree";
    case TreeMethod::DetPrimeOverV: return "det_prime_over_v";
    case TreeMethod::Harmonic: return "harmonic";
    case TreeMethod::Regular: return "regular";
    }
    return "unknown";
}

std::int64_t nearest_integer_strict(double x) {
    const double r = static_cast<double>(std::llround(x));
    const double guard = std::max(1e-6, 1e-10 * std::abs(x));
    if (!(std::abs(x - r) < guard)) {
        throw Error(ErrorCode::NonIntegerDeterminant, "value " + std::to_string(x) + " is not within " +
                                                          std::to_string(guard) + " of an integer");
    }
    return std::llround(x);
}

namespace {

constexpr double kSubsetLimit = 67108864.0;  // 2^26

[[maybe_unused]] double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Union-find without path compression so that unions can be undone in
/// LIFO order.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    /// False (and nothing recorded) when a and b are already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        history_.push_back(b);
        return true;
    }

    void rollback() {
        const int b = history_.back();
        history_.pop_back();
        const int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

class TreeEnumerator {
public:
    explicit TreeEnumerator(const DiscreteGraph& g)
        : edges_(g.edges().begin(), g.edges().end()), needed_(g.vertex_count() - 1), uf_(g.vertex_count()) {}

    std::uint64_t run() { return visit(0, 0); }

private:
    std::uint64_t visit(std::size_t next, int chosen) {
        if (chosen == needed_) return 1;  // V-1 acyclic edges span the graph
        if (static_cast<int>(edges_.size() - next) < needed_ - chosen) return 0;
        std::uint64_t total = 0;
        if (uf_.unite(edges_[next].u, edges_[next].v)) {
            total += visit(next + 1, chosen + 1);
            uf_.rollback();
        }
        total += visit(next + 1, chosen);
        return total;
    }

    std::vector<Edge> edges_;
    int needed_;
    RollbackUnionFind uf_;
};

} // namespace

bool brute_force_feasible(const DiscreteGraph& g) {
#ifdef QGRAPH_NO_BRUTE_FORCE
    (void)g;
    return false;
#else
    return binomial(g.edge_count(), g.vertex_count() - 1) <= kSubsetLimit;
#endif
}

TreeCount count_brute_force(const DiscreteGraph& g) {
#ifdef QGRAPH_NO_BRUTE_FORCE
    (void)g;
    throw Error(ErrorCode::NotApplicable, "brute-force enumeration disabled at build time");
#else
    if (!brute_force_feasible(g)) {
        throw Error(ErrorCode::TooLarge, "C(" + std::to_string(g.edge_count()) + "," +
                                             std::to_string(g.vertex_count() - 1) + ") edge subsets exceed 2^26");
    }
    return {static_cast<std::int64_t>(TreeEnumerator(g).run()), TreeMethod::BruteForce};
#endif
}

TreeCount count_matrix_tree(const DiscreteGraph& g, int removed_vertex) {
    const double minor = principal_minor(combinatorial_laplacian(g), removed_vertex);
    return {nearest_integer_strict(minor), TreeMethod::Minor};
}

TreeCount count_det_prime_over_v(const DiscreteGraph& g) {
    const double value = std::exp(log_det_prime(spectrum(combinatorial_laplacian(g))) - std::log(g.vertex_count()));
    return {nearest_integer_strict(value), TreeMethod::DetPrimeOverV};
}

TreeCount count_harmonic(const DiscreteGraph& g) {
    double log_value = log_det_prime(spectrum(harmonic_laplacian(g))) - std::log(2.0 * g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v) log_value += std::log(static_cast<double>(g.degree(v)));
    return {nearest_integer_strict(std::exp(log_value)), TreeMethod::Harmonic};
}

TreeCount count_regular(const DiscreteGraph& g, int d) {
    const auto degree = regular_degree(g);
    if (!degree || *degree != d) {
        throw Error(ErrorCode::NotRegular, "graph is not " + std::to_string(d) + "-regular");
    }
    const int n = g.vertex_count();
    const double log_value =
        (n - 1) * std::log(static_cast<double>(d)) - std::log(static_cast<double>(n)) +
        log_det_prime(spectrum(harmonic_laplacian(g)));
    return {nearest_integer_strict(std::exp(log_value)), TreeMethod::Regular};
}

} // namespace qgraph
