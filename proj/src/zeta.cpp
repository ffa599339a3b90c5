#include "qgraph/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qgraph/error.hpp"
#include "qgraph/laplacian.hpp"
#include "qgraph/spectrum_oracle.hpp"

namespace qgraph {

std::string_view to_string(ZetaRoute route) {
    return route == ZetaRoute::HurwitzFormula ? "hurwitz" : "direct_sum";
}

namespace {

constexpr int kDirectTerms = 20;

// B_{2k} / (2k)! for k = 1..4
constexpr std::array<double, 4> kBernoulliRatio = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
};

void check_hurwitz_args(double s, double a) {
    if (!(a > 0.0)) throw Error(ErrorCode::HurwitzDomain, "Hurwitz zeta needs a > 0, got " + std::to_string(a));
    if (s == 1.0) throw Error(ErrorCode::HalfLinePole, "Hurwitz zeta has a pole at s = 1");
}

// s (s+1) ... (s + 2k - 2) and its derivative
std::pair<double, double> rising_product(double s, int k) {
    double p = 1.0;
    double dp = 0.0;
    for (int j = 0; j <= 2 * k - 2; ++j) {
        dp = dp * (s + j) + p;
        p *= (s + j);
    }
    return {p, dp};
}

} // namespace

double hurwitz_zeta(double s, double a) {
    check_hurwitz_args(s, a);
    double sum = 0.0;
    for (int n = kDirectTerms - 1; n >= 0; --n) sum += std::pow(n + a, -s);
    const double x = kDirectTerms + a;
    sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
    for (int k = 1; k <= 4; ++k) {
        const auto [p, dp] = rising_product(s, k);
        sum += kBernoulliRatio[static_cast<std::size_t>(k - 1)] * p * std::pow(x, -s - 2 * k + 1);
    }
    return sum;
}

double hurwitz_zeta_ds(double s, double a) {
    check_hurwitz_args(s, a);
    double sum = 0.0;
    for (int n = kDirectTerms - 1; n >= 0; --n) sum -= std::log(n + a) * std::pow(n + a, -s);
    const double x = kDirectTerms + a;
    const double lx = std::log(x);
    const double xs = std::pow(x, 1.0 - s);
    sum += -lx * xs / (s - 1.0) - xs / ((s - 1.0) * (s - 1.0));
    sum += -0.5 * lx * std::pow(x, -s);
    for (int k = 1; k <= 4; ++k) {
        const auto [p, dp] = rising_product(s, k);
        sum += kBernoulliRatio[static_cast<std::size_t>(k - 1)] * (dp - lx * p) * std::pow(x, -s - 2 * k + 1);
    }
    return sum;
}

PhaseSet phase_set(const DiscreteGraph& g, double length) {
    const auto lambda = spectrum(harmonic_laplacian(g));
    PhaseSet ps;
    ps.length = length;
    ps.harmonic_eigenvalues.assign(lambda.eigenvalues.begin(), lambda.eigenvalues.end());
    ps.phases.resize(ps.harmonic_eigenvalues.size());
    // 2 is an exact eigenvalue iff g is bipartite; the square root below
    // would turn its rounding error into a phase error of order 1e-8
    if (is_bipartite(g)) ps.harmonic_eigenvalues.back() = 2.0;
    for (std::size_t j = 0; j < ps.phases.size(); ++j) {
        double x = ps.harmonic_eigenvalues[j];
        if (x < -1e-10 || x > 2.0 + 1e-10) {
            throw Error(ErrorCode::EigenvalueOutOfRange,
                        "harmonic eigenvalue " + std::to_string(x) + " outside [0, 2]");
        }
        x = std::clamp(x, 0.0, 2.0);
        if (j == static_cast<std::size_t>(lambda.zero_index)) {
            ps.phases[j] = 0.0;
        } else if (x <= 1.0) {
            ps.phases[j] = 2.0 * std::asin(std::sqrt(x / 2.0)) / length;
        } else {
            ps.phases[j] = (std::numbers::pi - 2.0 * std::asin(std::sqrt((2.0 - x) / 2.0))) / length;
        }
    }
    return ps;
}

namespace {

int betti_number(const DiscreteGraph& g) { return g.edge_count() - g.vertex_count() + 1; }

/// a_j = t_j l / 2pi for j >= 2, all in (0, 1/2].
std::vector<double> hurwitz_shifts(const DiscreteGraph& g, double length) {
    const PhaseSet ps = phase_set(g, length);
    std::vector<double> shifts;
    for (std::size_t j = 1; j < ps.phases.size(); ++j) {
        shifts.push_back(ps.phases[j] * length / (2.0 * std::numbers::pi));
    }
    return shifts;
}

} // namespace

ZetaEvaluation zeta_hurwitz(const DiscreteGraph& g, double length, double s) {
    if (s == 0.5) throw Error(ErrorCode::HalfLinePole, "the Hurwitz representation excludes s = 1/2");
    if (!(s > 0.0)) throw Error(ErrorCode::SNotConvergent, "zeta_hurwitz is evaluated for s > 0 only");

    const double beta = betti_number(g);
    const double scale = std::pow(length / (2.0 * std::numbers::pi), 2.0 * s);
    double value = (std::pow(4.0, s) * (beta - 1.0) + 2.0) * scale * riemann_zeta(2.0 * s);
    double pairs = 0.0;
    for (double a : hurwitz_shifts(g, length)) pairs += hurwitz_zeta(2.0 * s, a) + hurwitz_zeta(2.0 * s, 1.0 - a);
    value += scale * pairs;
    return ZetaEvaluation{s, value, ZetaRoute::HurwitzFormula, std::nullopt, std::nullopt};
}

namespace {

ZetaEvaluation direct_sum(const QuantumSpectrum& spectrum, double s, double total_length, int edge_count) {
    if (!(s > 1.0)) {
        throw Error(ErrorCode::SNotConvergent, "direct eigenvalue sum diverges for s <= 1 (s = " + std::to_string(s) + ")");
    }
    double sum = 0.0;
    for (auto it = spectrum.ks.rbegin(); it != spectrum.ks.rend(); ++it) {
        if (*it > 0.0) sum += std::pow(*it, -2.0 * s);
    }
    const double cutoff = spectrum.cutoff;
    const double tail = total_length / std::numbers::pi * std::pow(cutoff, 1.0 - 2.0 * s) / (2.0 * s - 1.0) +
                        2.0 * edge_count * std::pow(cutoff, -2.0 * s);
    return ZetaEvaluation{s, sum, ZetaRoute::DirectSum, cutoff, tail};
}

} // namespace

ZetaEvaluation zeta_direct_sum(const DiscreteGraph& g, double length, double s, double cutoff_k) {
    if (!(s > 1.0)) {
        throw Error(ErrorCode::SNotConvergent, "direct eigenvalue sum diverges for s <= 1 (s = " + std::to_string(s) + ")");
    }
    return direct_sum(enumerate_equilateral(g, length, cutoff_k), s, g.edge_count() * length, g.edge_count());
}

ZetaEvaluation zeta_direct_sum(const MetricGraph& mg, const QuantumSpectrum& spectrum, double s) {
    return direct_sum(spectrum, s, mg.total_length(), mg.graph().edge_count());
}

double minus_zeta_prime_at_zero(const DiscreteGraph& g, double length) {
    const double beta = betti_number(g);
    const double log_two_pi = std::log(2.0 * std::numbers::pi);
    double value = (beta - 1.0) * std::numbers::ln2 + (beta + 1.0) * std::log(length);
    for (double a : hurwitz_shifts(g, length)) {
        value -= 2.0 * (std::lgamma(a) + std::lgamma(1.0 - a) - log_two_pi);
    }
    return value;
}

double zeta_prime_at_zero_series(const DiscreteGraph& g, double length) {
    const double beta = betti_number(g);
    const double log_scale = 2.0 * std::log(length / (2.0 * std::numbers::pi));
    // d/ds [(4^s (beta-1) + 2) c^{2s} zeta_R(2s)] at s = 0
    double value = (2.0 * std::numbers::ln2 * (beta - 1.0) + log_scale * (beta + 1.0)) * riemann_zeta(0.0) +
                   (beta + 1.0) * 2.0 * riemann_zeta_ds(0.0);
    for (double a : hurwitz_shifts(g, length)) {
        value += log_scale * (hurwitz_zeta(0.0, a) + hurwitz_zeta(0.0, 1.0 - a));
        value += 2.0 * (hurwitz_zeta_ds(0.0, a) + hurwitz_zeta_ds(0.0, 1.0 - a));
    }
    return value;
}

double log_det_via_zeta(const DiscreteGraph& g, double length) { return minus_zeta_prime_at_zero(g, length); }

double det_via_zeta(const DiscreteGraph& g, double length) { return std::exp(log_det_via_zeta(g, length)); }

} // namespace qgraph
