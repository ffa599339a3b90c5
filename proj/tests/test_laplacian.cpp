#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qgraph/error.hpp"
#include "qgraph/laplacian.hpp"
#include "qgraph/random.hpp"

using namespace qgraph;
using doctest::Approx;

TEST_CASE("combinatorial Laplacian of P2 and C3") {
    const auto p2 = combinatorial_laplacian(path_graph(2)).entries;
    CHECK(p2(0, 0) == 1.0);
    CHECK(p2(0, 1) == -1.0);
    CHECK(p2(1, 1) == 1.0);

    const auto c3 = combinatorial_laplacian(cycle_graph(3)).entries;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(c3(i, j) == (i == j ? 2.0 : -1.0));

    const auto s = spectrum(combinatorial_laplacian(cycle_graph(3)));
    CHECK(s[0] == Approx(0.0).epsilon(1e-12));
    CHECK(s[1] == Approx(3.0));
    CHECK(s[2] == Approx(3.0));
}

TEST_CASE("every Laplacian kind annihilates constants and has zero row sums") {
    Pcg32 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_connected_graph(rng, 2, 9);
        const auto mg = attach_lengths(g, random_lengths(rng, g, 0.5, 1.5));
        for (const auto& m : {combinatorial_laplacian(g), harmonic_laplacian(g), weighted_r(mg), equilateral_r(g, 1.7)}) {
            const VectorX<double> ones = VectorX<double>::Ones(g.vertex_count());
            CHECK((m.entries * ones).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("harmonic Laplacian is similar to the normalized Laplacian") {
    Pcg32 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_connected_graph(rng, 2, 9);
        const auto h = harmonic_laplacian(g);
        const auto s = spectrum(h);
        Eigen::SelfAdjointEigenSolver<MatrixX<double>> ref(normalized_laplacian(g));
        for (Eigen::Index i = 0; i < s.size(); ++i) CHECK(s[i] == Approx(ref.eigenvalues()(i)).epsilon(1e-10));
        // D^{1/2} Delta D^{-1/2} is symmetric
        const VectorX<double> r = h.degrees.cwiseSqrt();
        const MatrixX<double> sym = r.asDiagonal() * h.entries * r.cwiseInverse().asDiagonal();
        CHECK((sym - sym.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(s.largest() <= 2.0 + 1e-12);
    }
}

TEST_CASE("harmonic spectrum of K_{2,4}") {
    const auto s = spectrum(harmonic_laplacian(complete_bipartite(2, 4)));
    CHECK(s[0] == Approx(0.0).epsilon(1e-12));
    for (int i = 1; i <= 4; ++i) CHECK(s[i] == Approx(1.0));
    CHECK(s[5] == Approx(2.0));
    CHECK(det_prime(s) == Approx(2.0));
}

TEST_CASE("path spectra match the cosine formula") {
    for (int n = 2; n <= 9; ++n) {
        const auto s = spectrum(combinatorial_laplacian(path_graph(n)));
        auto ref = oracle::path_laplacian_spectrum(n);
        std::sort(ref.begin(), ref.end());
        for (int i = 0; i < n; ++i) CHECK(s[i] == Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-10));
    }
}

TEST_CASE("weighted R of the star with lengths 1 and 2") {
    const auto mg = attach_lengths(star_graph(2), {1.0, 2.0});
    const auto r = weighted_r(mg).entries;
    const double expected[3][3] = {{1.5, -1.0, -0.5}, {-1.0, 1.0, 0.0}, {-0.5, 0.0, 0.5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r(i, j) == Approx(expected[i][j]));
    CHECK(oracle::det_prime_3x3(expected) == Approx(1.5));
    CHECK(det_prime(spectrum(weighted_r(mg))) == Approx(1.5));
}

TEST_CASE("R of an equilateral graph is L / l") {
    Pcg32 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_connected_graph(rng, 2, 8);
        const double l = rng.uniform(0.2, 3.0);
        const auto r = weighted_r(equilateral(g, l)).entries;
        const auto rt = equilateral_r(g, l).entries;
        CHECK((r - rt).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("det' identities") {
    Pcg32 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_connected_graph(rng, 2, 9);
        const int v = g.vertex_count();
        const double l = rng.uniform(0.3, 2.0);
        const double log_l = log_det_prime(spectrum(combinatorial_laplacian(g)));
        const double log_r = log_det_prime(spectrum(equilateral_r(g, l)));
        CHECK(log_r == Approx(log_l - (v - 1) * std::log(l)).epsilon(1e-10));

        // det'(Delta) = 2E det'(L) / (V prod d_v)
        double log_deg = 0.0;
        for (int u = 0; u < v; ++u) log_deg += std::log(g.degree(u));
        const double log_h = log_det_prime(spectrum(harmonic_laplacian(g)));
        CHECK(log_h == Approx(std::log(2.0 * g.edge_count()) + log_l - std::log(double(v)) - log_deg).epsilon(1e-10));

        // det'(L) = V det(L[i]) for every i
        const double minor = std::exp(log_l) / v;
        for (int i = 0; i < v; ++i)
            CHECK(principal_minor(combinatorial_laplacian(g), i) == Approx(minor).epsilon(1e-9));
    }
}

TEST_CASE("principal minors count spanning trees of small graphs") {
    CHECK(principal_minor(combinatorial_laplacian(path_graph(2)), 0) == Approx(1.0));
    CHECK(principal_minor(combinatorial_laplacian(cycle_graph(3)), 1) == Approx(3.0));
    CHECK(principal_minor(combinatorial_laplacian(complete_bipartite(2, 4)), 5) == Approx(32.0));
}

TEST_CASE("log_det_prime refuses a second zero mode") {
    SpectrumReal<double> s;
    s.eigenvalues = VectorX<double>(3);
    s.eigenvalues << 0.0, 0.0, 1.0;
    CHECK_THROWS_AS(log_det_prime(s), Error);
}

TEST_CASE("long double instantiation agrees with double") {
    const auto g = complete_bipartite(3, 3);
    const auto sd = spectrum(combinatorial_laplacian<double>(g));
    const auto sl = spectrum(combinatorial_laplacian<long double>(g));
    CHECK(static_cast<double>(det_prime(sl)) == Approx(det_prime(sd)).epsilon(1e-12));
    // 6 * 81 = tau(K33) * V
    CHECK(static_cast<double>(det_prime(sl)) == Approx(6.0 * 81.0));
}
