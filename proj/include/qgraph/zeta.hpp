#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

struct QuantumSpectrum;

// Special functions -------------------------------------------------------

/// Hurwitz zeta sum_{n>=0} (n + a)^{-s}, analytically continued, by
/// Euler-Maclaurin: 20 explicit terms, the integral tail and Bernoulli
/// corrections through B_8. Accurate to ~1e-12 for s in [-1, 8],
/// a in (0, 1]. Throws HurwitzDomain for a <= 0 and HalfLinePole at s = 1.
double hurwitz_zeta(double s, double a);

/// d/ds of hurwitz_zeta, from the same expansion differentiated term by term.
double hurwitz_zeta_ds(double s, double a);

inline double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }
inline double riemann_zeta_ds(double s) { return hurwitz_zeta_ds(s, 1.0); }

// Spectral zeta function of an equilateral quantum graph ------------------

/// Phases t_j in [0, pi/l] with 1 - cos(t_j l) = lambda_j, one per
/// eigenvalue of the harmonic Laplacian (ascending, with multiplicity).
struct PhaseSet {
    std::vector<double> phases;
    std::vector<double> harmonic_eigenvalues;
    double length = 0.0;
};

/// t_1 is set to exactly 0 (the zero mode, dropped by position); the rest are
/// computed through half-angle formulas so that small lambda and lambda near
/// 2 keep full precision. For bipartite g the top eigenvalue is set to exactly
/// 2. EigenvalueOutOfRange if some lambda leaves [0, 2]
/// by more than 1e-10.
PhaseSet phase_set(const DiscreteGraph& g, double length);

enum class ZetaRoute { HurwitzFormula, DirectSum };

std::string_view to_string(ZetaRoute route);

struct ZetaEvaluation {
    double s = 0.0;
    double value = 0.0;
    ZetaRoute route = ZetaRoute::HurwitzFormula;
    std::optional<double> truncation_k;
    std::optional<double> tail_bound;
};

/// Z(s) = (4^s (beta-1) + 2)(l/2pi)^{2s} zeta_R(2s)
///      + (l/2pi)^{2s} sum_{j>=2} [zeta_H(2s, a_j) + zeta_H(2s, 1 - a_j)],
/// a_j = t_j l / 2pi. Requires s > 0; s = 1/2 is refused (HalfLinePole).
ZetaEvaluation zeta_hurwitz(const DiscreteGraph& g, double length, double s);

/// sum of k^{-2s} over the nonzero k <= cutoff of the equilateral spectrum.
/// The tail bound integrates the Weyl density l_tot/pi from the cutoff and
/// adds one period of the equilateral spectrum (2E eigenvalues) at k^{-2s}:
///   (l_tot/pi) K^{1-2s} / (2s-1) + 2E K^{-2s}.
/// SNotConvergent for s <= 1.
ZetaEvaluation zeta_direct_sum(const DiscreteGraph& g, double length, double s, double cutoff_k);

/// As above, summing over a spectrum obtained elsewhere (e.g. the secular
/// solver). The graph supplies l_tot and E for the tail bound.
ZetaEvaluation zeta_direct_sum(const MetricGraph& mg, const QuantumSpectrum& spectrum, double s);

/// -Z'(0) from the closed form
///   (beta-1) ln 2 + (beta+1) ln l - 2 sum_{j>=2} [ln Gamma(a_j) + ln Gamma(1-a_j) - ln 2pi].
double minus_zeta_prime_at_zero(const DiscreteGraph& g, double length);

/// Z'(0) obtained by differentiating the Hurwitz representation term by term
/// (zeta_H and its s-derivative evaluated at 0 by Euler-Maclaurin). Used as
/// an independent check on the log-gamma closed form.
double zeta_prime_at_zero_series(const DiscreteGraph& g, double length);

/// exp(-Z'(0)), the regularised det' of the equilateral Laplacian.
double log_det_via_zeta(const DiscreteGraph& g, double length);
double det_via_zeta(const DiscreteGraph& g, double length);

} // namespace qgraph
