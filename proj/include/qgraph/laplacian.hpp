#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "qgraph/error.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class LaplacianKind {
    Combinatorial,        ///< L = D - A
    Harmonic,             ///< Delta = D^-1 L
    Weighted,             ///< R, off-diagonal -1/l_e
    EquilateralWeighted,  ///< R~ = L / l
};

/// A graph operator as a dense V x V matrix. Every kind has the constant
/// vector in its kernel. `degrees` is filled for every kind; the harmonic
/// Laplacian needs it to get back to a symmetric matrix.
template <typename Scalar = double>
struct LaplacianMatrix {
    MatrixX<Scalar> entries;
    LaplacianKind kind = LaplacianKind::Combinatorial;
    VectorX<Scalar> degrees;

    Eigen::Index size() const { return entries.rows(); }
};

template <typename Scalar = double>
VectorX<Scalar> degree_vector(const DiscreteGraph& g) {
    VectorX<Scalar> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d(v) = Scalar(g.degree(v));
    return d;
}

template <typename Scalar = double>
LaplacianMatrix<Scalar> combinatorial_laplacian(const DiscreteGraph& g) {
    const int n = g.vertex_count();
    LaplacianMatrix<Scalar> m{MatrixX<Scalar>::Zero(n, n), LaplacianKind::Combinatorial, degree_vector<Scalar>(g)};
    for (const Edge& e : g.edges()) {
        m.entries(e.u, e.v) = Scalar(-1);
        m.entries(e.v, e.u) = Scalar(-1);
    }
    m.entries.diagonal() = m.degrees;
    return m;
}

template <typename Scalar = double>
LaplacianMatrix<Scalar> harmonic_laplacian(const DiscreteGraph& g) {
    auto m = combinatorial_laplacian<Scalar>(g);
    m.entries = m.degrees.cwiseInverse().asDiagonal() * m.entries;
    m.kind = LaplacianKind::Harmonic;
    return m;
}

/// D^{-1/2} L D^{-1/2}, the symmetric matrix similar to the harmonic Laplacian.
template <typename Scalar = double>
MatrixX<Scalar> normalized_laplacian(const DiscreteGraph& g) {
    const auto l = combinatorial_laplacian<Scalar>(g);
    const VectorX<Scalar> s = l.degrees.cwiseSqrt().cwiseInverse();
    return s.asDiagonal() * l.entries * s.asDiagonal();
}

/// R_uu = sum of 1/l_e over edges at u, R_uv = -1/l_(u,v).
template <typename Scalar = double>
LaplacianMatrix<Scalar> weighted_r(const MetricGraph& mg) {
    const DiscreteGraph& g = mg.graph();
    const int n = g.vertex_count();
    LaplacianMatrix<Scalar> m{MatrixX<Scalar>::Zero(n, n), LaplacianKind::Weighted, degree_vector<Scalar>(g)};
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const Scalar w = Scalar(1) / Scalar(mg.length(e));
        m.entries(ed.u, ed.v) -= w;
        m.entries(ed.v, ed.u) -= w;
        m.entries(ed.u, ed.u) += w;
        m.entries(ed.v, ed.v) += w;
    }
    return m;
}

template <typename Scalar = double>
LaplacianMatrix<Scalar> equilateral_r(const DiscreteGraph& g, Scalar length) {
    auto m = combinatorial_laplacian<Scalar>(g);
    m.entries /= length;
    m.kind = LaplacianKind::EquilateralWeighted;
    return m;
}

/// Ascending real spectrum. The zero mode of a connected graph sits at
/// zero_index (always 0).
template <typename Scalar = double>
struct SpectrumReal {
    VectorX<Scalar> eigenvalues;
    Eigen::Index zero_index = 0;

    Eigen::Index size() const { return eigenvalues.size(); }
    Scalar operator[](Eigen::Index i) const { return eigenvalues(i); }
    /// Second smallest eigenvalue (algebraic connectivity for L).
    Scalar gap() const { return eigenvalues(1); }
    Scalar largest() const { return eigenvalues(eigenvalues.size() - 1); }
};

namespace detail {

template <typename Scalar>
Scalar residual_tolerance() {
    return std::max(Scalar(1e-10), Scalar(1000) * std::numeric_limits<Scalar>::epsilon());
}

} // namespace detail

/// Eigenvalues of any of the four kinds. Everything is diagonalised as a
/// symmetric matrix (the harmonic Laplacian through D^{1/2} Delta D^{-1/2});
/// each eigenpair is then checked against the original matrix with
/// ||M x - lambda x|| <= 1e-10 ||M|| ||x||.
template <typename Scalar = double>
SpectrumReal<Scalar> spectrum(const LaplacianMatrix<Scalar>& m) {
    MatrixX<Scalar> sym;
    VectorX<Scalar> back;  // maps symmetric eigenvectors to eigenvectors of m.entries
    if (m.kind == LaplacianKind::Harmonic) {
        const VectorX<Scalar> root = m.degrees.cwiseSqrt();
        sym = root.asDiagonal() * m.entries * root.cwiseInverse().asDiagonal();
        sym = (sym + sym.transpose()) / Scalar(2);
        back = root.cwiseInverse();
    } else {
        sym = m.entries;
        back = VectorX<Scalar>::Ones(m.size());
    }

    Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::ConvergenceFailure, "symmetric eigensolver did not converge");
    }

    const Scalar norm = m.entries.norm();
    const Scalar tol = detail::residual_tolerance<Scalar>() * std::max(norm, Scalar(1));
    for (Eigen::Index j = 0; j < m.size(); ++j) {
        VectorX<Scalar> x = back.asDiagonal() * solver.eigenvectors().col(j);
        x.normalize();
        const Scalar residual = (m.entries * x - solver.eigenvalues()(j) * x).norm();
        if (!(residual <= tol)) {
            throw Error(ErrorCode::ConvergenceFailure,
                        "eigenpair " + std::to_string(j) + " residual " + std::to_string(double(residual)) +
                            " exceeds tolerance");
        }
    }
    return SpectrumReal<Scalar>{solver.eigenvalues(), 0};
}

/// log of the product of the eigenvalues at index >= 1. The zero mode is
/// dropped by position; a retained eigenvalue <= 1e-12 raises
/// NonpositiveEigenvalue.
template <typename Scalar = double>
Scalar log_det_prime(const SpectrumReal<Scalar>& s) {
    Scalar acc = 0;
    for (Eigen::Index j = 0; j < s.size(); ++j) {
        if (j == s.zero_index) continue;
        if (!(s[j] > Scalar(1e-12))) {
            throw Error(ErrorCode::NonpositiveEigenvalue,
                        "retained eigenvalue " + std::to_string(j) + " is " + std::to_string(double(s[j])));
        }
        acc += std::log(s[j]);
    }
    return acc;
}

template <typename Scalar = double>
Scalar det_prime(const SpectrumReal<Scalar>& s) {
    return std::exp(log_det_prime(s));
}

/// det of the matrix with row and column i removed (LU with partial pivoting).
template <typename Scalar = double>
Scalar principal_minor(const LaplacianMatrix<Scalar>& m, Eigen::Index i) {
    const Eigen::Index n = m.size();
    if (i < 0 || i >= n) throw Error(ErrorCode::VertexOutOfRange, "minor index out of range");
    if (n == 1) return Scalar(1);
    MatrixX<Scalar> sub(n - 1, n - 1);
    for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
            if (c == i) continue;
            sub(rr, cc++) = m.entries(r, c);
        }
        ++rr;
    }
    return sub.partialPivLu().determinant();
}

} // namespace qgraph
