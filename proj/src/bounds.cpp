#include "qgraph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qgraph/error.hpp"
#include "qgraph/laplacian.hpp"

namespace qgraph {

BoundReport make_bound(std::string name, double lhs, double rhs, Comparison comparison) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.comparison = comparison;
    if (comparison == Comparison::Strict) {
        r.holds = lhs < rhs;
    } else {
        r.holds = lhs <= rhs + 1e-12 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
    }
    return r;
}

namespace {

void check_window(const MetricGraph& mg, double length, double delta) {
    const double top = length + delta;
    for (int e = 0; e < mg.graph().edge_count(); ++e) {
        const double l = mg.length(e);
        if (l < length || l > top * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
            throw Error(ErrorCode::LengthsOutOfWindow, "edge " + std::to_string(e) + " length " + std::to_string(l) +
                                                           " outside [" + std::to_string(length) + ", " +
                                                           std::to_string(top) + "]");
        }
    }
}

double sqrt_2ev(const DiscreteGraph& g) { return std::sqrt(2.0 * g.edge_count() * g.vertex_count()); }

} // namespace

double perturbation_norm(const MetricGraph& mg, double length) {
    const Eigen::MatrixXd diff = equilateral_r(mg.graph(), length).entries - weighted_r(mg).entries;
    // symmetric: the spectral norm is the largest |eigenvalue|
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(diff, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

NormBoundReport norm_bound(const MetricGraph& mg, double length, double delta) {
    check_window(mg, length, delta);
    const DiscreteGraph& g = mg.graph();
    const double lhs = perturbation_norm(mg, length);
    const double l2 = length * length;
    const int d_max = shape(g).max_degree;
    return NormBoundReport{
        make_bound("norm_bound", lhs, delta * sqrt_2ev(g) / l2, Comparison::Strict),
        make_bound("norm_bound_intermediate", lhs, delta * std::sqrt(2.0 * g.edge_count() * (d_max + 1)) / l2,
                   Comparison::Strict),
    };
}

std::vector<BoundReport> eigenvalue_drift(const MetricGraph& mg, double length, double delta) {
    check_window(mg, length, delta);
    const auto tilde = spectrum(equilateral_r(mg.graph(), length));
    const auto generic = spectrum(weighted_r(mg));
    const double rhs = delta * sqrt_2ev(mg.graph()) / (length * length);
    std::vector<BoundReport> out;
    for (Eigen::Index j = 0; j < tilde.size(); ++j) {
        out.push_back(make_bound("eigenvalue_drift[" + std::to_string(j) + "]", std::abs(tilde[j] - generic[j]), rhs,
                                 Comparison::Strict));
    }
    return out;
}

BoundReport weyl_drift(const MetricGraph& mg, double length) {
    const auto tilde = spectrum(equilateral_r(mg.graph(), length));
    const auto generic = spectrum(weighted_r(mg));
    const double drift = (tilde.eigenvalues - generic.eigenvalues).cwiseAbs().maxCoeff();
    return make_bound("weyl_drift", drift, perturbation_norm(mg, length), Comparison::NonStrict);
}

DetDriftReport det_drift(const MetricGraph& mg, double length, double delta) {
    check_window(mg, length, delta);
    const DiscreteGraph& g = mg.graph();
    const auto generic = spectrum(weighted_r(mg));
    const double det_r = det_prime(generic);
    const double det_tilde = det_prime(spectrum(equilateral_r(g, length)));

    DetDriftReport r;
    r.shift = delta * sqrt_2ev(g) / (length * length);
    r.lambda2 = generic.gap();
    r.guard_ok = r.shift < r.lambda2;
    const double rhs = delta * std::pow(2.0, g.vertex_count() - 1) * sqrt_2ev(g) / (length * length * r.lambda2) * det_r;
    r.bound = make_bound("det_drift", std::abs(det_r - det_tilde), rhs, Comparison::Strict);
    return r;
}

BoundReport product_shift_bound(std::span<const double> alphas, double a) {
    std::vector<double> sorted(alphas.begin(), alphas.end());
    std::sort(sorted.begin(), sorted.end());
    double shifted = 1.0;
    double plain = 1.0;
    double tail = 1.0;  // product without the smallest value
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        shifted *= sorted[i] + a;
        plain *= sorted[i];
        if (i > 0) tail *= sorted[i];
    }
    return make_bound("product_shift", shifted - plain, a * std::pow(2.0, static_cast<double>(sorted.size())) * tail,
                      Comparison::Strict);
}

BoundReport mckay_lower(const DiscreteGraph& g) {
    const double lower = 4.0 / (shape(g).diameter * static_cast<double>(g.vertex_count()));
    return make_bound("mckay_lower", lower, spectrum(combinatorial_laplacian(g)).gap(), Comparison::NonStrict);
}

UpperBoundsReport upper_bounds(const DiscreteGraph& g) {
    const double top = spectrum(combinatorial_laplacian(g)).largest();
    const int degree_sum = max_edge_degree_sum(g);
    return UpperBoundsReport{
        make_bound("max_eigenvalue_vs_vertex_count", top, g.vertex_count(), Comparison::NonStrict),
        make_bound("max_eigenvalue_vs_edge_degree_sum", top, degree_sum, Comparison::NonStrict),
        degree_sum < g.vertex_count(),
    };
}

// The perturbation argument bounds
//   |T - T~| < (delta/l) det'(L) (2^{E+1}/V) [V^2 2^{V-3} sqrt(2EV) + 1]
//            < (delta/l) det'(L) V 2^{E+V-1} sqrt(2EV)
// using lambda~_2 > 4/(V^2 l). With det'(L) <= M^{V-1} in place of V^{V-1},
// requiring the right side to stay below 1/2 gives the threshold below.
double relaxed_threshold(const DiscreteGraph& g, double length) {
    const int m = max_edge_degree_sum(g);
    const int v = g.vertex_count();
    const int e = g.edge_count();
    if (m >= v) {
        throw Error(ErrorCode::NotApplicable,
                    "max edge degree sum " + std::to_string(m) + " is not below V = " + std::to_string(v));
    }
    const double log_denominator = (v - 1) * std::log(static_cast<double>(m)) + std::log(static_cast<double>(v)) +
                                   (e + v) * std::numbers::ln2 + 0.5 * std::log(2.0 * e * v);
    return length * std::exp(-log_denominator);
}

} // namespace qgraph
