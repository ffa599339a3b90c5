#pragma once

#include <span>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

enum class Comparison { Strict, NonStrict };

/// An inequality lhs < rhs (or lhs <= rhs) evaluated on concrete data.
/// Non-strict comparisons allow a relative slack of 1e-12 for rounding.
struct BoundReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    double slack = 0.0;  ///< rhs - lhs
    Comparison comparison = Comparison::Strict;
};

BoundReport make_bound(std::string name, double lhs, double rhs, Comparison comparison);

struct NormBoundReport {
    BoundReport bound;         ///< ||R~ - R||_2 < delta sqrt(2EV) / l^2
    BoundReport intermediate;  ///< ||R~ - R||_2 < delta sqrt(2E(d_max+1)) / l^2
};

/// Spectral norm of R~ - R with R~ = L / l. Every edge length must lie in
/// [l, l + delta] (LengthsOutOfWindow otherwise).
NormBoundReport norm_bound(const MetricGraph& mg, double length, double delta);

/// ||R~ - R||_2 alone.
double perturbation_norm(const MetricGraph& mg, double length);

/// |lambda~_j - lambda_j| < delta sqrt(2EV) / l^2 for every index j of the
/// sorted spectra of R~ and R.
std::vector<BoundReport> eigenvalue_drift(const MetricGraph& mg, double length, double delta);

/// max_j |lambda~_j - lambda_j| <= ||R~ - R||_2 (Weyl), non-strict.
BoundReport weyl_drift(const MetricGraph& mg, double length);

struct DetDriftReport {
    BoundReport bound;    ///< |det'R - det'R~| < delta 2^{V-1} sqrt(2EV) det'R / (l^2 lambda_2)
    double shift = 0.0;   ///< a = delta sqrt(2EV) / l^2
    double lambda2 = 0.0; ///< second eigenvalue of R
    /// a < lambda_2. When false the inequality is still evaluated but the
    /// estimate behind it does not apply.
    bool guard_ok = false;
};

DetDriftReport det_drift(const MetricGraph& mg, double length, double delta);

/// prod (alpha_j + a) - prod alpha_j < a 2^n prod_{i>=2} alpha_i for
/// 0 < a < alpha_1 <= ... <= alpha_n (values are sorted here).
BoundReport product_shift_bound(std::span<const double> alphas, double a);

/// mu_2 >= 4 / (D V), reported as lhs = 4/(DV), rhs = mu_2, non-strict.
BoundReport mckay_lower(const DiscreteGraph& g);

struct UpperBoundsReport {
    BoundReport vertex_count;     ///< mu_V <= V
    BoundReport edge_degree_sum;  ///< mu_V <= max_{(u,v)} (d_u + d_v)
    bool relaxation_available = false;  ///< max (d_u + d_v) < V
};

UpperBoundsReport upper_bounds(const DiscreteGraph& g);

/// Spread threshold obtained when det'(L) <= M^{V-1}, M = max (d_u + d_v),
/// replaces det'(L) <= V^{V-1} in the perturbation argument:
///   l / (M^{V-1} V 2^{E+V} sqrt(2EV)).
/// NotApplicable unless M < V.
double relaxed_threshold(const DiscreteGraph& g, double length);

} // namespace qgraph
