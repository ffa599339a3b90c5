#include "qgraph/spectrum_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qgraph/error.hpp"
#include "qgraph/zeta.hpp"

namespace qgraph {

std::string_view to_string(SpectrumSource source) {
    return source == SpectrumSource::VonBelowEnumeration ? "von_below_enumeration" : "secular_solver";
}

std::size_t QuantumSpectrum::counting_function(double k) const {
    return static_cast<std::size_t>(std::upper_bound(ks.begin(), ks.end(), k) - ks.begin());
}

QuantumSpectrum enumerate_equilateral(const DiscreteGraph& g, double length, double cutoff_k) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const PhaseSet ps = phase_set(g, length);
    const int beta = g.edge_count() - g.vertex_count() + 1;

    std::vector<std::pair<double, int>> contributions;
    contributions.emplace_back(0.0, 1);
    for (std::size_t j = 1; j < ps.phases.size(); ++j) {
        const double t = ps.phases[j];
        for (int n = 0; t + two_pi * n / length <= cutoff_k; ++n) contributions.emplace_back(t + two_pi * n / length, 1);
        for (int n = 1; -t + two_pi * n / length <= cutoff_k; ++n) contributions.emplace_back(-t + two_pi * n / length, 1);
    }
    for (int n = 1; n * std::numbers::pi / length <= cutoff_k; ++n) {
        contributions.emplace_back(n * std::numbers::pi / length, beta - 1);
        if (n % 2 == 0) contributions.emplace_back(n * std::numbers::pi / length, 2);
    }
    std::sort(contributions.begin(), contributions.end());

    QuantumSpectrum out;
    out.cutoff = cutoff_k;
    out.source = SpectrumSource::VonBelowEnumeration;
    for (std::size_t i = 0; i < contributions.size();) {
        const double k = contributions[i].first;
        int multiplicity = 0;
        std::size_t j = i;
        for (; j < contributions.size() && contributions[j].first - k <= 1e-9 * std::max(1.0, k); ++j) {
            multiplicity += contributions[j].second;
        }
        if (multiplicity < 0) {
            throw std::logic_error("negative multiplicity " + std::to_string(multiplicity) + " at k = " + std::to_string(k));
        }
        out.ks.insert(out.ks.end(), static_cast<std::size_t>(multiplicity), k);
        i = j;
    }
    return out;
}

Eigen::MatrixXcd bond_scattering_matrix(const MetricGraph& mg, double k) {
    const DiscreteGraph& g = mg.graph();
    const int bonds = 2 * g.edge_count();
    auto origin = [&](int b) { const Edge& e = g.edge(b / 2); return b % 2 == 0 ? e.u : e.v; };
    auto terminus = [&](int b) { const Edge& e = g.edge(b / 2); return b % 2 == 0 ? e.v : e.u; };

    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(bonds, bonds);
    for (int b = 0; b < bonds; ++b) {
        const int v = terminus(b);
        const std::complex<double> propagate = std::polar(1.0, k * mg.length(b / 2));
        const double transmit = 2.0 / g.degree(v);
        for (int e : g.incident_edges(v)) {
            for (int bp : {2 * e, 2 * e + 1}) {
                if (origin(bp) != v) continue;
                const double sigma = transmit - ((bp ^ 1) == b ? 1.0 : 0.0);
                u(bp, b) = sigma * propagate;
            }
        }
    }
    return u;
}

std::vector<double> bond_eigenphases(const MetricGraph& mg, double k) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(bond_scattering_matrix(mg, k), false);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::RootRefinementFailure, "unitary eigensolver failed at k = " + std::to_string(k));
    }
    std::vector<double> phases;
    phases.reserve(static_cast<std::size_t>(solver.eigenvalues().size()));
    for (const auto& z : solver.eigenvalues()) phases.push_back(std::arg(z));
    std::sort(phases.begin(), phases.end());
    return phases;
}

namespace {

/// Number of phases that moved from <= 0 to > 0 between two samples, given
/// that every phase moved forward by less than `travel`.
int crossings_through_one(const std::vector<double>& before, const std::vector<double>& after, double travel) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> all(before);
    all.insert(all.end(), after.begin(), after.end());
    std::sort(all.begin(), all.end());

    // widest phase-free arc (lo, hi), circularly
    double gap = all.front() + two_pi - all.back();
    double lo = all.back();
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i] - all[i - 1] > gap) {
            gap = all[i] - all[i - 1];
            lo = all[i - 1];
        }
    }
    if (!(gap > travel)) {
        throw Error(ErrorCode::GridTooCoarse, "eigenphase gap " + std::to_string(gap) + " below per-step travel " +
                                                  std::to_string(travel));
    }
    double anchor = lo + gap / 2.0;
    if (anchor > std::numbers::pi) anchor -= two_pi;
    const double hi = lo + gap;
    // 0 strictly inside the free arc: nothing can pass through it
    if ((lo < 0.0 && 0.0 < hi) || (lo < two_pi && two_pi < hi)) return 0;

    auto in_arc = [anchor](double phi) { return anchor < 0.0 ? (anchor < phi && phi <= 0.0) : (phi > anchor || phi <= 0.0); };
    const auto count_before = std::count_if(before.begin(), before.end(), in_arc);
    const auto count_after = std::count_if(after.begin(), after.end(), in_arc);
    const auto crossed = count_before - count_after;
    if (crossed < 0) {
        throw Error(ErrorCode::RootRefinementFailure, "eigenphases moved backwards");
    }
    return static_cast<int>(crossed);
}

/// rho(phi) = 2 pi ceil(phi / 2 pi) - phi for phi in (-pi, pi]
double phase_remainder(double phi) { return phi <= 0.0 ? -phi : 2.0 * std::numbers::pi - phi; }

class SecularScan {
public:
    SecularScan(const MetricGraph& mg, double cutoff)
        : mg_(mg), cutoff_(cutoff), l_max_(mg.max_length()) {}

    QuantumSpectrum run() {
        const int e = mg_.graph().edge_count();
        const double step = std::min(std::numbers::pi / (16.0 * e * l_max_), std::numbers::pi / (8.0 * mg_.total_length()));
        const double start = 1e-7 / l_max_;

        QuantumSpectrum out;
        out.cutoff = cutoff_;
        out.source = SpectrumSource::SecularSolver;
        out.ks.push_back(0.0);

        double a = start;
        auto pa = bond_eigenphases(mg_, a);
        const auto p_start = pa;
        while (a < cutoff_) {
            const double b = std::min(a + step, cutoff_);
            auto pb = bond_eigenphases(mg_, b);
            const int n = crossings_through_one(pa, pb, travel(b - a));
            refine(a, b, pa, pb, n, out.ks);
            a = b;
            pa = std::move(pb);
        }

        // winding check: sum of lifted phases grows by exactly 2 l_tot (K - start)
        double winding = 2.0 * mg_.total_length() * (cutoff_ - start);
        for (double phi : pa) winding += phase_remainder(phi);
        for (double phi : p_start) winding -= phase_remainder(phi);
        const double expected = winding / (2.0 * std::numbers::pi);
        const double found = static_cast<double>(out.ks.size() - 1);
        // a phase sitting on +1 at the cutoff may be attributed either way
        const double slack = static_cast<double>(std::count_if(pa.begin(), pa.end(), [](double p) { return std::abs(p) < 1e-9; }));
        if (std::abs(expected - found) > slack + 1e-6) {
            throw Error(ErrorCode::GridTooCoarse, "found " + std::to_string(found) + " roots but the phase winding gives " +
                                                      std::to_string(expected));
        }
        std::sort(out.ks.begin(), out.ks.end());
        return out;
    }

private:
    // slightly more than the largest possible phase advance over dk
    double travel(double dk) const { return l_max_ * dk * (1.0 + 1e-9) + 1e-12; }

    void refine(double a, double b, const std::vector<double>& pa, const std::vector<double>& pb, int count,
                std::vector<double>& roots) {
        if (count == 0) return;
        if (b - a <= 1e-9) {
            roots.insert(roots.end(), static_cast<std::size_t>(count), 0.5 * (a + b));
            return;
        }
        const double m = 0.5 * (a + b);
        const auto pm = bond_eigenphases(mg_, m);
        const int left = crossings_through_one(pa, pm, travel(m - a));
        const int right = crossings_through_one(pm, pb, travel(b - m));
        if (left + right != count) {
            throw Error(ErrorCode::RootRefinementFailure, "bisection lost roots near k = " + std::to_string(m));
        }
        refine(a, m, pa, pm, left, roots);
        refine(m, b, pm, pb, right, roots);
    }

    const MetricGraph& mg_;
    double cutoff_;
    double l_max_;
};

} // namespace

QuantumSpectrum secular_solve(const MetricGraph& mg, double cutoff_k) {
    if (!(cutoff_k > 0.0)) throw Error(ErrorCode::NotApplicable, "cutoff must be positive");
    return SecularScan(mg, cutoff_k).run();
}

bool same_multiset(const QuantumSpectrum& a, const QuantumSpectrum& b, double tol) {
    if (a.ks.size() != b.ks.size()) return false;
    for (std::size_t i = 0; i < a.ks.size(); ++i) {
        if (std::abs(a.ks[i] - b.ks[i]) > tol) return false;
    }
    return true;
}

} // namespace qgraph
