#include "doctest.h"

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "qgraph/quantum_det.hpp"
#include "qgraph/random.hpp"

using namespace qgraph;
using doctest::Approx;

TEST_CASE("star with lengths 1 and 2") {
    const auto mg = attach_lengths(star_graph(2), {1.0, 2.0});
    const auto d = det_prime_friedlander(mg);
    CHECK(d.value == Approx(6.0));
    CHECK(d.route == DeterminantRoute::Friedlander);
    CHECK(d.betti == 0);
}

TEST_CASE("stars: det' = (2^E / E) * total length") {
    Pcg32 rng(31);
    for (int e = 1; e <= 8; ++e) {
        const auto g = star_graph(e);
        const auto mg = attach_lengths(g, random_lengths(rng, g, 0.5, 2.0));
        CHECK(det_prime_friedlander(mg).value == Approx(std::ldexp(1.0, e) / e * mg.total_length()).epsilon(1e-10));
    }
}

TEST_CASE("a path with any lengths is one Neumann interval: det' = 2 * total length") {
    Pcg32 rng(32);
    for (int n = 2; n <= 8; ++n) {
        const auto g = path_graph(n);
        const auto mg = attach_lengths(g, random_lengths(rng, g, 0.2, 3.0));
        CHECK(det_prime_friedlander(mg).value == Approx(2.0 * mg.total_length()).epsilon(1e-10));
    }
}

TEST_CASE("a cycle with any lengths is a circle: det' = total length squared") {
    Pcg32 rng(33);
    for (int n = 3; n <= 8; ++n) {
        const auto g = cycle_graph(n);
        const auto mg = attach_lengths(g, random_lengths(rng, g, 0.2, 3.0));
        CHECK(det_prime_friedlander(mg).value == Approx(mg.total_length() * mg.total_length()).epsilon(1e-10));
    }
}

TEST_CASE("complete bipartite graphs: det' = 2^{mp} l^{beta+1}") {
    for (int m = 1; m <= 4; ++m)
        for (int p = 1; p <= 4; ++p) {
            if (m + p < 2) continue;
            const double l = 0.75;
            const int beta = m * p - m - p + 1;
            const double expected = std::ldexp(1.0, m * p) * std::pow(l, beta + 1);
            const auto g = complete_bipartite(m, p);
            CHECK(det_prime_equilateral(g, l).value == Approx(expected).epsilon(1e-10));
            CHECK(det_prime_friedlander(equilateral(g, l)).value == Approx(expected).epsilon(1e-10));
        }
    CHECK(det_prime_equilateral(complete_bipartite(2, 4), 1.0).value == Approx(256.0));
}

TEST_CASE("T_Gamma of an equilateral graph is its spanning-tree count") {
    CHECK(t_gamma_equilateral(complete_bipartite(2, 4), 1.0) == Approx(32.0));
    CHECK(t_gamma_equilateral(star_graph(5), 2.3) == Approx(1.0));
    Pcg32 rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_connected_graph(rng, 2, 9);
        const double l = rng.uniform(0.1, 5.0);
        const double exact = static_cast<double>(oracle::integer_minor(g));
        CHECK(t_gamma_equilateral(g, l) == Approx(exact).epsilon(1e-9));
        CHECK(t_gamma(equilateral(g, l), l) == Approx(exact).epsilon(1e-9));
    }
}

TEST_CASE("threshold") {
    CHECK(threshold_delta(path_graph(2), 1.0) == Approx(1.0 / 64.0));
    CHECK(threshold_delta(path_graph(2), 3.0) == Approx(3.0 / 64.0));
    const auto k24 = complete_bipartite(2, 4);
    CHECK(threshold_delta(k24, 2.0) == Approx(2.0 * threshold_delta(k24, 1.0)));
    // V^V 2^{E+V} sqrt(2EV) = 46656 * 16384 * sqrt(96)
    CHECK(threshold_delta(k24, 1.0) == Approx(1.0 / (46656.0 * 16384.0 * std::sqrt(96.0))));
}

TEST_CASE("lengths below the threshold recover the tree count") {
    Pcg32 rng(35);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_connected_graph(rng, 2, 8);
        const double l = rng.uniform(0.5, 2.0);
        const double delta = 0.999 * threshold_delta(g, l);
        const auto mg = attach_lengths(g, random_lengths(rng, g, l, delta));
        const auto est = tree_estimator(mg);
        // for dense graphs the threshold drops below one ulp of l
        if (delta > 64 * std::numeric_limits<double>::epsilon() * l) CHECK(est.spread_ok);
        CHECK(est.nearest == oracle::integer_minor(g));
    }
}

TEST_CASE("stars recover a single tree well beyond the general threshold") {
    Pcg32 rng(36);
    for (int e = 2; e <= 6; ++e) {
        const auto g = star_graph(e);
        const auto mg = attach_lengths(g, random_lengths(rng, g, 1.0, 0.4));
        const auto est = tree_estimator(mg);
        CHECK_FALSE(est.spread_ok);
        REQUIRE(est.relaxed_star_ok.has_value());
        CHECK(*est.relaxed_star_ok);
        CHECK(est.nearest == 1);
    }
    CHECK_FALSE(tree_estimator(equilateral(complete_graph(4), 1.0)).relaxed_star_ok.has_value());
}
