#pragma once

// Nystrom discretization of integral operators on L^2(0, inf).
//
// An operator with kernel K is represented on a HalfLineGrid by the symmetric
// matrix M_ij = sqrt(w_i w_j) K(p_i, p_j). Its spectrum approximates that of
// the integral operator; a multiplication operator stays diagonal.

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "skeleton/error.hpp"
#include "skeleton/quadrature.hpp"

namespace skeleton {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct DiscretizedOperator {
    Matrix matrix;
    std::shared_ptr<const HalfLineGrid> grid;
    std::string label;

    Eigen::Index size() const { return matrix.rows(); }
};

inline std::shared_ptr<const HalfLineGrid> share(HalfLineGrid grid) {
    return std::make_shared<const HalfLineGrid>(std::move(grid));
}

namespace detail {

inline void require_finite(double value, std::size_t i, std::size_t j, double p, double q, const std::string& label) {
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "kernel '" << label << "' is not finite at node pair (" << i << ", " << j << "), p = " << p
            << ", q = " << q;
        throw AssemblyError(msg.str());
    }
}

} // namespace detail

/// Symmetric Nystrom matrix of a symmetric kernel. Only the upper triangle is
/// evaluated.
template <class Kernel>
DiscretizedOperator assemble(Kernel&& kernel, std::shared_ptr<const HalfLineGrid> grid, std::string label) {
    const auto& g = *grid;
    const std::size_t n = g.size();
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const double sj = std::sqrt(g.weights[j]);
        for (std::size_t i = 0; i <= j; ++i) {
            const double value = kernel(g.nodes[i], g.nodes[j]);
            detail::require_finite(value, i, j, g.nodes[i], g.nodes[j], label);
            const double entry = std::sqrt(g.weights[i]) * sj * value;
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry;
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = entry;
        }
    }
    return DiscretizedOperator{std::move(m), std::move(grid), std::move(label)};
}

template <class Kernel>
DiscretizedOperator assemble(Kernel&& kernel, const HalfLineGrid& grid, std::string label) {
    return assemble(std::forward<Kernel>(kernel), share(grid), std::move(label));
}

/// Multiplication operator diag(symbol(p_i)); the weights cancel.
template <class Symbol>
DiscretizedOperator assemble_diagonal(Symbol&& symbol, std::shared_ptr<const HalfLineGrid> grid, std::string label) {
    const auto& g = *grid;
    const auto n = static_cast<Eigen::Index>(g.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double p = g.nodes[static_cast<std::size_t>(i)];
        const double value = symbol(p);
        detail::require_finite(value, static_cast<std::size_t>(i), static_cast<std::size_t>(i), p, p, label);
        m(i, i) = value;
    }
    return DiscretizedOperator{std::move(m), std::move(grid), std::move(label)};
}

template <class Symbol>
DiscretizedOperator assemble_diagonal(Symbol&& symbol, const HalfLineGrid& grid, std::string label) {
    return assemble_diagonal(std::forward<Symbol>(symbol), share(grid), std::move(label));
}

struct Spectrum {
    Vector eigenvalues;                  ///< ascending
    std::optional<Matrix> eigenvectors;  ///< orthonormal columns, aligned with eigenvalues

    double min() const { return eigenvalues(0); }
    double max() const { return eigenvalues(eigenvalues.size() - 1); }
};

inline Spectrum eigen_symmetric(const Matrix& matrix, bool want_vectors = false) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw DomainError("eigen_symmetric needs a non-empty square matrix");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, want_vectors ? Eigen::ComputeEigenvectors
                                                                      : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("symmetric eigensolver did not converge", 0.0, 0.0);
    }
    Spectrum spectrum;
    spectrum.eigenvalues = solver.eigenvalues();
    if (want_vectors) spectrum.eigenvectors = solver.eigenvectors();
    return spectrum;
}

inline Spectrum eigen_symmetric(const DiscretizedOperator& op, bool want_vectors = false) {
    return eigen_symmetric(op.matrix, want_vectors);
}

/// Largest ||M v - lambda v|| over the returned pairs, relative to ||M||_2 ~ max |lambda|.
inline double max_relative_residual(const Matrix& matrix, const Spectrum& spectrum) {
    if (!spectrum.eigenvectors) return 0.0;
    const Matrix& v = *spectrum.eigenvectors;
    const double norm = std::max(std::abs(spectrum.min()), std::abs(spectrum.max()));
    double worst = 0.0;
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
        const double r = (matrix * v.col(k) - spectrum.eigenvalues(k) * v.col(k)).norm();
        worst = std::max(worst, r);
    }
    return norm > 0.0 ? worst / norm : worst;
}

/// Hilbert-Schmidt norm sqrt(int int K(p,q)^2 dp dq) over (0, inf)^2 by nested
/// adaptive quadrature, to relative accuracy rel_tol.
template <class Kernel>
double hs_norm(Kernel&& kernel, double rel_tol, double map_scale = 1.0) {
    if (!(rel_tol > 0.0)) throw DomainError("hs_norm tolerance must be positive");
    // Magnitude estimate from a small fixed tensor grid sets the absolute target.
    const auto coarse = build_grid(QuadratureConfig{48, 2.0, MapKind::algebraic, 1e-10});
    double estimate = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        for (std::size_t j = 0; j < coarse.size(); ++j) {
            const double k = kernel(coarse.nodes[i], coarse.nodes[j]);
            estimate += coarse.weights[i] * coarse.weights[j] * k * k;
        }
    }
    // ||K||^2 to relative 2 rel_tol gives ||K|| to relative rel_tol.
    const double outer_tol = std::max(2.0 * rel_tol * estimate, 1e-300);
    const double inner_tol = std::max(0.1 * outer_tol, 1e-300);
    AdaptiveOptions options;
    options.map_scale = map_scale;
    auto row = [&](double p) {
        auto integrand = [&](double q) {
            const double k = kernel(p, q);
            return k * k;
        };
        return adaptive_integrate(integrand, inner_tol, options).value;
    };
    const auto result = adaptive_integrate(row, outer_tol, options);
    return std::sqrt(std::max(result.value, 0.0));
}

/// Frobenius norm of the Nystrom matrix: the discrete Hilbert-Schmidt norm.
inline double frobenius_norm(const DiscretizedOperator& op) { return op.matrix.norm(); }

} // namespace skeleton
