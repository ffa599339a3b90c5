#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qgraph/graph.hpp"

namespace qgraph {

enum class SpectrumSource { VonBelowEnumeration, SecularSolver };

std::string_view to_string(SpectrumSource source);

/// Wavenumbers k >= 0 with k^2 an eigenvalue of the Neumann-Kirchhoff
/// Laplacian, ascending, repeated by multiplicity, up to `cutoff`.
/// ks.front() is the constant mode k = 0.
struct QuantumSpectrum {
    std::vector<double> ks;
    double cutoff = 0.0;
    SpectrumSource source = SpectrumSource::VonBelowEnumeration;

    /// #{k_j <= k}
    std::size_t counting_function(double k) const;
};

/// Equilateral spectrum assembled from the harmonic-Laplacian phases t_j:
///   k = t_j + 2 pi n / l (n >= 0) and k = -t_j + 2 pi n / l (n >= 1), j >= 2,
///   multiplicity (beta - 1) at every k = n pi / l, n >= 1,
///   a further 2 at every k = 2 pi n / l, n >= 1,
///   and k = 0 once.
/// Coincident contributions are merged (relative tolerance 1e-9) before the
/// multiplicities are expanded; a negative net multiplicity is a logic error.
QuantumSpectrum enumerate_equilateral(const DiscreteGraph& g, double length, double cutoff_k);

/// Bond scattering matrix U(k) = S exp(i k L_b) on the 2E directed bonds.
/// Bond 2e runs edge e from its lower to its higher vertex, bond 2e+1 back.
/// S[b'][b] = 2/d_v - [b' reverses b] when b ends where b' starts (at v).
Eigen::MatrixXcd bond_scattering_matrix(const MetricGraph& mg, double k);

/// Eigenphases of U(k) in (-pi, pi].
std::vector<double> bond_eigenphases(const MetricGraph& mg, double k);

/// Roots k in (0, K] of det(I - U(k)), plus k = 0 once.
///
/// The eigenphases of U(k) rotate forward with speed in [l_min, l_max]. On a
/// grid of step pi / (16 E l_max) (never coarser than pi / (8 l_tot)) each
/// phase moves less than half the widest phase-free arc of consecutive
/// samples, so the number of phases passing through +1 in a step is read off
/// exactly from counts on that arc. Steps with crossings are bisected to
/// width 1e-9; the count in the final interval is the multiplicity.
/// The total is checked against the winding of det U(k) = det S e^{2ik l_tot}
/// (GridTooCoarse on mismatch); inconsistent bisection counts raise
/// RootRefinementFailure.
QuantumSpectrum secular_solve(const MetricGraph& mg, double cutoff_k);

/// True when two spectra have the same length and agree entrywise within tol.
bool same_multiset(const QuantumSpectrum& a, const QuantumSpectrum& b, double tol);

} // namespace qgraph
