#pragma once

#include <cstdint>
#include <string_view>

#include "qgraph/graph.hpp"

namespace qgraph {

enum class TreeMethod { BruteForce, Minor, DetPrimeOverV, Harmonic, Regular };

std::string_view to_string(TreeMethod method);

struct TreeCount {
    std::int64_t count = 0;
    TreeMethod method = TreeMethod::BruteForce;
};

/// Round-half-away-from-zero, refusing values more than
/// max(1e-6, 1e-10 |x|) from the nearest integer (NonIntegerDeterminant).
std::int64_t nearest_integer_strict(double x);

/// Whether count_brute_force will accept g: the number of (V-1)-edge
/// subsets C(E, V-1) must not exceed 2^26. Every graph with E <= 24 passes.
/// Always false when the library is built with QGRAPH_BRUTE_FORCE=OFF.
bool brute_force_feasible(const DiscreteGraph& g);

/// Enumerates every (V-1)-edge subset, keeping those a union-find shows to be
/// acyclic (hence spanning). Cyclic prefixes are abandoned as soon as the
/// union-find sees the cycle. Throws TooLarge when !brute_force_feasible(g).
TreeCount count_brute_force(const DiscreteGraph& g);

/// det(L[i]); the default removes vertex 0.
TreeCount count_matrix_tree(const DiscreteGraph& g, int removed_vertex = 0);

/// det'(L) / V
TreeCount count_det_prime_over_v(const DiscreteGraph& g);

/// (prod d_v / 2E) det'(Delta)
TreeCount count_harmonic(const DiscreteGraph& g);

/// (d^{V-1} / V) det'(Delta) for a d-regular graph; NotRegular otherwise.
TreeCount count_regular(const DiscreteGraph& g, int d);

} // namespace qgraph
