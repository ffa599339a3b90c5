#include "qgraph/quantum_det.hpp"

#include <cmath>
#include <numbers>

#include "qgraph/laplacian.hpp"

namespace qgraph {

std::string_view to_string(DeterminantRoute route) {
    switch (route) {
    case DeterminantRoute::EquilateralClosedForm: return "equilateral_closed_form";
    case DeterminantRoute::Friedlander: return "friedlander";
    }
    return "unknown";
}

namespace {

double log_degree_product(const DiscreteGraph& g) {
    double acc = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) acc += std::log(static_cast<double>(g.degree(v)));
    return acc;
}

int betti_number(const DiscreteGraph& g) { return g.edge_count() - g.vertex_count() + 1; }

} // namespace

DeterminantReport det_prime_equilateral(const DiscreteGraph& g, double length) {
    const int e = g.edge_count();
    const int beta = betti_number(g);
    DeterminantReport r;
    r.route = DeterminantRoute::EquilateralClosedForm;
    r.vertex_count = g.vertex_count();
    r.edge_count = e;
    r.betti = beta;
    r.lengths.assign(static_cast<std::size_t>(e), length);
    r.log_value = (e - 1) * std::numbers::ln2 + (beta + 1) * std::log(length) +
                  log_det_prime(spectrum(harmonic_laplacian(g)));
    r.value = std::exp(r.log_value);
    return r;
}

DeterminantReport det_prime_friedlander(const MetricGraph& mg) {
    const DiscreteGraph& g = mg.graph();
    DeterminantReport r;
    r.route = DeterminantRoute::Friedlander;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.betti = betti_number(g);
    r.lengths.assign(mg.lengths().begin(), mg.lengths().end());

    double log_lengths = 0.0;
    for (double l : mg.lengths()) log_lengths += std::log(l);
    r.log_value = g.edge_count() * std::numbers::ln2 + std::log(mg.total_length()) -
                  std::log(static_cast<double>(g.vertex_count())) + log_lengths - log_degree_product(g) +
                  log_det_prime(spectrum(weighted_r(mg)));
    r.value = std::exp(r.log_value);
    return r;
}

namespace {

double log_t_prefactor(const DiscreteGraph& g, double length) {
    const int e = g.edge_count();
    return log_degree_product(g) - std::log(static_cast<double>(e)) - e * std::numbers::ln2 -
           (betti_number(g) + 1) * std::log(length);
}

} // namespace

double t_gamma(const MetricGraph& mg, double reference_length) {
    return std::exp(log_t_prefactor(mg.graph(), reference_length) + det_prime_friedlander(mg).log_value);
}

double t_gamma_equilateral(const DiscreteGraph& g, double length) {
    return std::exp(log_t_prefactor(g, length) + det_prime_equilateral(g, length).log_value);
}

double threshold_delta(const DiscreteGraph& g, double length) {
    const double v = g.vertex_count();
    const double e = g.edge_count();
    const double log_denominator = v * std::log(v) + (e + v) * std::numbers::ln2 + 0.5 * std::log(2.0 * e * v);
    return length * std::exp(-log_denominator);
}

TreeEstimate tree_estimator(const MetricGraph& mg) {
    TreeEstimate t;
    t.reference_length = mg.min_length();
    t.spread = mg.max_length() - mg.min_length();
    t.t_gamma = t_gamma(mg, t.reference_length);
    t.nearest = std::llround(t.t_gamma);
    t.delta_threshold = threshold_delta(mg.graph(), t.reference_length);
    t.spread_ok = t.spread < t.delta_threshold;
    if (is_star(mg.graph())) t.relaxed_star_ok = t.spread <= t.reference_length / 2.0;
    return t;
}

} // namespace qgraph
