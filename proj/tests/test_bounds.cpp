#include "doctest.h"

#include <cmath>

#include "qgraph/bounds.hpp"
#include "qgraph/error.hpp"
#include "qgraph/quantum_det.hpp"
#include "qgraph/random.hpp"

using namespace qgraph;
using doctest::Approx;

TEST_CASE("norm bound on the star with lengths 1 and 1.1") {
    const auto mg = attach_lengths(star_graph(2), {1.0, 1.1});
    const auto r = norm_bound(mg, 1.0, 0.1);
    // R~ - R is the single-edge Laplacian with weight 1 - 1/1.1 = 1/11
    CHECK(r.bound.lhs == Approx(2.0 / 11.0));
    CHECK(r.bound.rhs == Approx(0.1 * std::sqrt(12.0)));
    CHECK(r.bound.holds);
    CHECK(r.intermediate.holds);
}

TEST_CASE("equilateral input has zero perturbation") {
    const auto mg = equilateral(complete_graph(5), 1.3);
    const auto r = norm_bound(mg, 1.3, 0.01);
    CHECK(r.bound.lhs == Approx(0.0).epsilon(1e-14));
    CHECK(r.bound.holds);
    for (const auto& b : eigenvalue_drift(mg, 1.3, 0.01)) {
        CHECK(b.lhs < 1e-12);
        CHECK(b.holds);
    }
    const auto d = det_drift(mg, 1.3, 0.01);
    CHECK(d.bound.lhs < 1e-9 * d.bound.rhs);
    CHECK(d.bound.holds);
}

TEST_CASE("det drift on a nearly equilateral star") {
    const auto mg = attach_lengths(star_graph(2), {1.0, 1.01});
    const auto d = det_drift(mg, 1.0, 0.01);
    CHECK(d.guard_ok);
    CHECK(d.bound.holds);
    CHECK(d.bound.slack > 10.0 * d.bound.lhs);
}

TEST_CASE("lengths outside the window are refused") {
    const auto mg = attach_lengths(star_graph(2), {1.0, 1.5});
    CHECK_THROWS_AS(norm_bound(mg, 1.0, 0.1), Error);
    CHECK_THROWS_AS(norm_bound(mg, 1.2, 0.5), Error);
}

TEST_CASE("product shift self-test") {
    const double alphas[] = {2.0, 3.0, 4.0};
    const auto r = product_shift_bound(alphas, 1.0);
    CHECK(r.lhs == 36.0);
    CHECK(r.rhs == 96.0);
    CHECK(r.holds);
}

TEST_CASE("McKay lower bound") {
    // P2: mu_2 = 2 = 4 / (1 * 2), equality
    const auto p2 = mckay_lower(path_graph(2));
    CHECK(p2.lhs == Approx(2.0));
    CHECK(p2.rhs == Approx(2.0));
    CHECK(p2.holds);
    const auto p4 = mckay_lower(path_graph(4));
    CHECK(p4.rhs == Approx(2.0 - std::sqrt(2.0)));
    CHECK(p4.lhs == Approx(1.0 / 3.0));
    CHECK(p4.holds);
}

TEST_CASE("upper bounds on the largest Laplacian eigenvalue") {
    const auto k24 = upper_bounds(complete_bipartite(2, 4));
    CHECK(k24.vertex_count.lhs == Approx(6.0));
    CHECK(k24.vertex_count.holds);
    CHECK(k24.edge_degree_sum.rhs == 6.0);
    CHECK_FALSE(k24.relaxation_available);

    const auto p5 = upper_bounds(path_graph(5));
    CHECK(p5.edge_degree_sum.rhs == 4.0);
    CHECK(p5.relaxation_available);

    const auto k4 = upper_bounds(complete_graph(4));
    CHECK(k4.vertex_count.lhs == Approx(4.0));
    CHECK(k4.vertex_count.holds);  // equality
}

TEST_CASE("relaxed threshold") {
    const auto p5 = path_graph(5);
    CHECK(relaxed_threshold(p5, 1.0) > threshold_delta(p5, 1.0));
    CHECK(relaxed_threshold(p5, 2.0) == Approx(2.0 * relaxed_threshold(p5, 1.0)));
    CHECK_THROWS_AS(relaxed_threshold(complete_bipartite(2, 4), 1.0), Error);
    CHECK_THROWS_AS(relaxed_threshold(star_graph(4), 1.0), Error);
}

TEST_CASE("relaxed threshold recovers the tree count") {
    Pcg32 rng(61);
    int used = 0;
    for (int trial = 0; trial < 400 && used < 50; ++trial) {
        const auto g = random_connected_graph(rng, 4, 9, 0.1, 0.4);
        if (max_edge_degree_sum(g) >= g.vertex_count()) continue;
        ++used;
        const double delta = 0.9 * relaxed_threshold(g, 1.0);
        const auto est = tree_estimator(attach_lengths(g, random_lengths(rng, g, 1.0, delta)));
        const auto exact = tree_estimator(equilateral(g, 1.0));
        CHECK(est.nearest == exact.nearest);
    }
    CHECK(used > 10);
}

TEST_CASE("all bounds hold on random instances") {
    Pcg32 rng(62);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = random_connected_graph(rng, 2, 8);
        const double l = rng.uniform(0.5, 2.0);
        const double delta = l * rng.uniform(1e-6, 0.05);
        const auto mg = attach_lengths(g, random_lengths(rng, g, l, delta));

        const auto n = norm_bound(mg, l, delta);
        CHECK(n.bound.holds);
        CHECK(n.intermediate.holds);
        for (const auto& b : eigenvalue_drift(mg, l, delta)) CHECK(b.holds);
        CHECK(weyl_drift(mg, l).holds);
        const auto d = det_drift(mg, l, delta);
        if (d.guard_ok) CHECK(d.bound.holds);
        CHECK(mckay_lower(g).holds);
        const auto u = upper_bounds(g);
        CHECK(u.vertex_count.holds);
        CHECK(u.edge_degree_sum.holds);
    }
}
