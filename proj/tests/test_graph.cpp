#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "qgraph/error.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/random.hpp"

using namespace qgraph;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Parse;
}

} // namespace

TEST_CASE("build_graph accepts the smallest connected graph") {
    const auto g = build_graph(2, {{0, 1}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge(0) == Edge{0, 1});
}

TEST_CASE("build_graph stores edges canonically in input order") {
    const auto g = build_graph(3, {{2, 1}, {1, 0}});
    CHECK(g.edge(0) == Edge{1, 2});
    CHECK(g.edge(1) == Edge{0, 1});
    CHECK(g.edge_index(2, 1) == 0);
    CHECK_FALSE(g.edge_index(0, 2).has_value());
}

TEST_CASE("K_{2,4} from its eight bipartite pairs") {
    std::vector<std::pair<int, int>> edges;
    for (int u : {0, 1})
        for (int v : {2, 3, 4, 5}) edges.emplace_back(u, v);
    const auto g = build_graph(6, edges);
    CHECK(g.edge_count() == 8);
    const auto s = shape(g);
    CHECK(s.betti == 3);
    CHECK(s.diameter == 2);
    CHECK(s.degree_sequence == std::vector<int>{4, 4, 2, 2, 2, 2});
    CHECK(s.max_degree == 4);
}

TEST_CASE("build_graph rejects invalid input") {
    CHECK(code_of([] { build_graph(3, {{0, 1}, {1, 2}, {0, 2}, {0, 2}}); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { build_graph(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { build_graph(3, {{0, 1}, {1, 1}}); }) == ErrorCode::SelfLoop);
    CHECK(code_of([] { build_graph(3, {{0, 1}, {1, 3}}); }) == ErrorCode::VertexOutOfRange);
    CHECK(code_of([] { build_graph(4, {{0, 1}, {2, 3}}); }) == ErrorCode::Disconnected);
    CHECK(code_of([] { build_graph(1, {}); }) == ErrorCode::TooFewVertices);
}

TEST_CASE("shape of small graphs") {
    SUBCASE("P2") {
        const auto s = shape(path_graph(2));
        CHECK(s.betti == 0);
        CHECK(s.diameter == 1);
        CHECK(s.degree_sequence == std::vector<int>{1, 1});
    }
    SUBCASE("3-cycle") {
        const auto s = shape(cycle_graph(3));
        CHECK(s.betti == 1);
        CHECK(s.diameter == 1);
        CHECK(s.degree_sequence == std::vector<int>{2, 2, 2});
    }
    SUBCASE("P5") { CHECK(shape(path_graph(5)).diameter == 4); }
}

TEST_CASE("attach_lengths") {
    const auto p2 = attach_lengths(path_graph(2), {1.0});
    CHECK(p2.is_equilateral());
    CHECK(p2.total_length() == 1.0);

    const auto star = attach_lengths(star_graph(2), {1.0, 2.0});
    CHECK_FALSE(star.is_equilateral());
    CHECK(star.total_length() == 3.0);
    CHECK(star.min_length() == 1.0);
    CHECK(star.max_length() == 2.0);

    CHECK(code_of([] { attach_lengths(path_graph(2), {0.0}); }) == ErrorCode::NonpositiveLength);
    CHECK(code_of([] { attach_lengths(path_graph(3), {1.0, -2.0}); }) == ErrorCode::NonpositiveLength);
    CHECK(code_of([] { attach_lengths(path_graph(3), {1.0}); }) == ErrorCode::MissingLength);
}

TEST_CASE("structural predicates") {
    CHECK(is_star(star_graph(4)));
    CHECK(is_star(path_graph(2)));
    CHECK(is_star(path_graph(3)));
    CHECK_FALSE(is_star(path_graph(4)));
    CHECK(regular_degree(cycle_graph(5)) == 2);
    CHECK(regular_degree(complete_graph(4)) == 3);
    CHECK_FALSE(regular_degree(path_graph(3)).has_value());
    CHECK(max_edge_degree_sum(path_graph(5)) == 4);
    CHECK(max_edge_degree_sum(complete_bipartite(2, 4)) == 6);
    CHECK(max_edge_degree_sum(star_graph(4)) == 5);
}

TEST_CASE("random graph properties: Betti number, diameter, handshake") {
    Pcg32 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_connected_graph(rng, 2, 10);
        const auto s = shape(g);
        CHECK(s.betti == g.edge_count() - g.vertex_count() + 1);
        CHECK(s.betti >= 0);

        int brute_diameter = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto d = bfs_distances(g, v);
            for (int x : d) {
                REQUIRE(x >= 0);
                brute_diameter = std::max(brute_diameter, x);
            }
        }
        CHECK(s.diameter == brute_diameter);
        CHECK(s.diameter >= 1);
        CHECK(s.diameter <= g.vertex_count() - 1);

        const int degree_sum = std::accumulate(s.degree_sequence.begin(), s.degree_sequence.end(), 0);
        CHECK(degree_sum == 2 * g.edge_count());
        CHECK(*std::min_element(s.degree_sequence.begin(), s.degree_sequence.end()) >= 1);
    }
}

TEST_CASE("PCG32 matches the reference implementation") {
    // pcg32-demo with seed 42, stream 54
    Pcg32 rng(42u, 54u);
    const std::uint32_t expected[] = {0xa15c02b7, 0x7b47f409, 0xba1d3330, 0x83d2f293, 0xbfa4784b, 0xcbed606e};
    for (std::uint32_t x : expected) CHECK(rng.next() == x);
}

TEST_CASE("connected graph catalog has the known isomorphism-class counts") {
    const auto catalog = connected_graph_catalog(7);
    std::vector<int> per_v(8, 0);
    for (const auto& g : catalog) per_v[static_cast<std::size_t>(g.vertex_count())]++;
    // OEIS A001349
    CHECK(per_v[2] == 1);
    CHECK(per_v[3] == 2);
    CHECK(per_v[4] == 6);
    CHECK(per_v[5] == 21);
    CHECK(per_v[6] == 112);
    CHECK(per_v[7] == 853);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(path_graph(5)));
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(complete_bipartite(3, 4)));
    CHECK_FALSE(is_bipartite(complete_graph(3)));
}
