#include "doctest.h"

#include "oracles.hpp"
#include "qgraph/error.hpp"
#include "qgraph/random.hpp"
#include "qgraph/spanning_trees.hpp"

using namespace qgraph;

TEST_CASE("Bareiss oracle on textbook values") {
    CHECK(oracle::integer_minor(path_graph(2)) == 1);
    CHECK(oracle::integer_minor(cycle_graph(7)) == 7);
    CHECK(oracle::integer_minor(complete_graph(4)) == 16);
    CHECK(oracle::integer_minor(complete_bipartite(2, 4)) == 32);
    CHECK(oracle::integer_minor(complete_bipartite(3, 4)) == 432);
}

TEST_CASE("complete graphs follow Cayley's formula") {
    for (int n = 2; n <= 7; ++n) {
        const auto g = complete_graph(n);
        CHECK(count_brute_force(g).count == oracle::cayley(n));
        CHECK(count_matrix_tree(g).count == oracle::cayley(n));
        CHECK(count_det_prime_over_v(g).count == oracle::cayley(n));
        CHECK(count_harmonic(g).count == oracle::cayley(n));
        CHECK(count_regular(g, n - 1).count == oracle::cayley(n));
    }
    CHECK(count_matrix_tree(complete_graph(12)).count == oracle::cayley(12));
}

TEST_CASE("complete bipartite graphs") {
    for (int m = 1; m <= 4; ++m)
        for (int p = 1; p <= 4; ++p) {
            if (m + p < 2) continue;
            const auto g = complete_bipartite(m, p);
            CHECK(count_brute_force(g).count == oracle::bipartite_trees(m, p));
            CHECK(count_harmonic(g).count == oracle::bipartite_trees(m, p));
        }
}

TEST_CASE("trees and cycles") {
    CHECK(count_brute_force(path_graph(6)).count == 1);
    CHECK(count_brute_force(star_graph(5)).count == 1);
    CHECK(count_brute_force(cycle_graph(9)).count == 9);
    CHECK(count_regular(cycle_graph(9), 2).count == 9);
}

TEST_CASE("every counting route agrees with the exact oracle on random graphs") {
    Pcg32 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_connected_graph(rng, 2, 9);
        const std::int64_t exact = oracle::integer_minor(g);
        if (brute_force_feasible(g)) CHECK(count_brute_force(g).count == exact);
        for (int i = 0; i < g.vertex_count(); ++i) CHECK(count_matrix_tree(g, i).count == exact);
        CHECK(count_det_prime_over_v(g).count == exact);
        CHECK(count_harmonic(g).count == exact);
        if (auto d = regular_degree(g)) CHECK(count_regular(g, *d).count == exact);
    }
}

TEST_CASE("method tags and refusals") {
    CHECK(count_brute_force(path_graph(3)).method == TreeMethod::BruteForce);
    CHECK(count_harmonic(path_graph(3)).method == TreeMethod::Harmonic);
    CHECK_THROWS_AS(count_regular(path_graph(3), 2), Error);
    CHECK_THROWS_AS(nearest_integer_strict(2.5), Error);
    CHECK(nearest_integer_strict(3.0000000001) == 3);
    CHECK(nearest_integer_strict(-0.0) == 0);
}

TEST_CASE("brute-force admission") {
    CHECK(brute_force_feasible(complete_graph(7)));   // E = 21
    CHECK(brute_force_feasible(complete_graph(8)));   // C(28, 7) = 1184040
    CHECK_FALSE(brute_force_feasible(complete_graph(12)));
    CHECK_THROWS_AS(count_brute_force(complete_graph(12)), Error);
    CHECK(count_brute_force(complete_graph(8)).count == oracle::cayley(8));
}
