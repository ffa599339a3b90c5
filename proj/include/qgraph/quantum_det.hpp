#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

enum class DeterminantRoute { EquilateralClosedForm, Friedlander };

std::string_view to_string(DeterminantRoute route);

/// Zeta-regularised det' of the Neumann-Kirchhoff Laplacian on a metric graph.
struct DeterminantReport {
    double value = 0.0;
    double log_value = 0.0;
    DeterminantRoute route = DeterminantRoute::Friedlander;
    int vertex_count = 0;
    int edge_count = 0;
    int betti = 0;
    std::vector<double> lengths;
};

/// 2^{E-1} l^{beta+1} det'(Delta) for the graph with every edge of length l.
DeterminantReport det_prime_equilateral(const DiscreteGraph& g, double length);

/// (2^E l_tot / V) (prod l_e / prod d_v) det'(R)
DeterminantReport det_prime_friedlander(const MetricGraph& mg);

/// prod d_v / (E 2^E l^{beta+1}) * det'(quantum Laplacian), with the
/// determinant taken from the Friedlander route and `reference_length` as l.
double t_gamma(const MetricGraph& mg, double reference_length);

/// Same quantity for the equilateral graph of edge length l; equals the
/// spanning-tree count up to rounding error.
double t_gamma_equilateral(const DiscreteGraph& g, double length);

/// l / (V^V 2^{E+V} sqrt(2EV)): edge-length spreads strictly below this make
/// the nearest integer to T_Gamma the spanning-tree count.
double threshold_delta(const DiscreteGraph& g, double length);

struct TreeEstimate {
    double t_gamma = 0.0;
    std::int64_t nearest = 0;
    double reference_length = 0.0;  ///< min edge length
    double spread = 0.0;             ///< max - min edge length
    double delta_threshold = 0.0;
    bool spread_ok = false;           ///< spread < delta_threshold
    std::optional<bool> relaxed_star_ok;  ///< spread <= l/2, stars only
};

/// T_Gamma with l = min edge length and delta = max - min. Rounding never
/// fails; spread_ok says whether the result is certified.
TreeEstimate tree_estimator(const MetricGraph& mg);

} // namespace qgraph
