#pragma once

// Coarse, fully independent check of the skeleton energies: finite
// differences for
//
//   H = -1/2 Laplacian - delta(A_1^perp . x) - delta(A_2^perp . x) + lambda delta(A_3^perp . x)
//
// on [-W, W]^2 with Dirichlet walls. Each delta line is smeared into a hat
// profile one cell wide across the line, normalised so its integral across
// the line is exactly one. The lowest eigenvalue is found by single-vector
// LOBPCG, preconditioned with the exact inverse of the shifted discrete
// Laplacian (diagonalised by a 2-D sine transform).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <fftw3.h>

#include "skeleton/error.hpp"
#include "skeleton/geometry.hpp"

namespace skeleton {

struct GridOracleConfig {
    double box_half_width = 30.0;
    /// Cells per axis (mesh - 1 interior points). Must be even so that the
    /// three lines cross exactly at a grid node.
    int mesh = 600;
    int delta_width_cells = 1;    ///< half-width of the hat profile, in cells
    double eigensolver_tol = 1e-9;  ///< on ||H x - rho x|| with ||x|| = 1
    int max_iterations = 4000;
    /// Line couplings (c_1, c_2, c_3); default (-1, -1, lambda).
    std::optional<std::array<double, 3>> couplings;
    unsigned seed = 12345;
};

inline void validate(const GridOracleConfig& config) {
    if (config.mesh < 100) throw DomainError("grid oracle mesh must be at least 100 cells per axis");
    if (config.mesh % 2 != 0) throw DomainError("grid oracle mesh must be even (lines must cross at a node)");
    if (!(config.box_half_width > 0.0)) throw DomainError("grid oracle box half-width must be positive");
    if (config.delta_width_cells < 1) throw DomainError("delta width must be at least one cell");
    if (!(config.eigensolver_tol > 0.0)) throw DomainError("eigensolver tolerance must be positive");
}

struct GridOracleResult {
    double energy = 0.0;
    double residual = 0.0;
    int iterations = 0;
    int mesh = 0;
    double spacing = 0.0;
    /// ||x - R x|| / (2 ||x||) for the reflections x -> -x and y -> -y.
    double odd_fraction_x = 0.0;
    double odd_fraction_y = 0.0;
};

namespace detail {

struct FftwPlan {
    fftw_plan plan = nullptr;
    explicit FftwPlan(fftw_plan p) : plan(p) {}
    FftwPlan(const FftwPlan&) = delete;
    FftwPlan& operator=(const FftwPlan&) = delete;
    ~FftwPlan() {
        if (plan) fftw_destroy_plan(plan);
    }
};

struct FftwBuffer {
    double* data = nullptr;
    explicit FftwBuffer(std::size_t n) : data(fftw_alloc_real(n)) {
        if (!data) throw std::bad_alloc();
    }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    ~FftwBuffer() { fftw_free(data); }
};

/// Matrix-free 5-point Hamiltonian plus the sine-transform preconditioner.
class GridHamiltonian {
public:
    GridHamiltonian(int mesh, double half_width, std::vector<double> potential, double shift)
        : n_(mesh),
          h_(2.0 * half_width / (mesh + 1)),
          potential_(std::move(potential)),
          buffer_(static_cast<std::size_t>(mesh) * static_cast<std::size_t>(mesh)),
          plan_(fftw_plan_r2r_2d(mesh, mesh, buffer_.data, buffer_.data, FFTW_RODFT00, FFTW_RODFT00, FFTW_ESTIMATE)) {
        // Eigenvalues of -1/2 d^2/dx^2 (Dirichlet, spacing h): (1 - cos(pi k / (n+1))) / h^2.
        lambda1d_.resize(static_cast<std::size_t>(n_));
        for (int k = 0; k < n_; ++k) {
            lambda1d_[static_cast<std::size_t>(k)] = (1.0 - std::cos(std::numbers::pi * (k + 1) / (n_ + 1))) / (h_ * h_);
        }
        shift_ = shift;
    }

    std::size_t size() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }
    double spacing() const { return h_; }
    int mesh() const { return n_; }

    void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
        const double c = 0.5 / (h_ * h_);
        const int n = n_;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const std::size_t idx = static_cast<std::size_t>(i) * n + j;
                double s = 4.0 * x[idx];
                if (i > 0) s -= x[idx - n];
                if (i + 1 < n) s -= x[idx + n];
                if (j > 0) s -= x[idx - 1];
                if (j + 1 < n) s -= x[idx + 1];
                y[idx] = c * s + potential_[idx] * x[idx];
            }
        }
    }

    /// y = (K + shift)^{-1} x with K the discrete -1/2 Laplacian.
    void precondition(const Eigen::VectorXd& x, Eigen::VectorXd& y) {
        const std::size_t total = size();
        std::copy(x.data(), x.data() + total, buffer_.data);
        fftw_execute(plan_.plan);
        const double norm = 1.0 / (4.0 * (n_ + 1.0) * (n_ + 1.0));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                const std::size_t idx = static_cast<std::size_t>(i) * n_ + j;
                buffer_.data[idx] *= norm / (lambda1d_[static_cast<std::size_t>(i)] + lambda1d_[static_cast<std::size_t>(j)] + shift_);
            }
        }
        fftw_execute(plan_.plan);
        std::copy(buffer_.data, buffer_.data + total, y.data());
    }

private:
    int n_;
    double h_;
    double shift_ = 1.0;
    std::vector<double> potential_;
    std::vector<double> lambda1d_;
    FftwBuffer buffer_;
    FftwPlan plan_;
};

inline double reflection_odd_fraction(const Eigen::VectorXd& x, int n, bool flip_x) {
    double diff = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int ri = flip_x ? n - 1 - i : i;
            const int rj = flip_x ? j : n - 1 - j;
            const double d = x[static_cast<std::size_t>(i) * n + j] - x[static_cast<std::size_t>(ri) * n + rj];
            diff += d * d;
        }
    }
    return 0.5 * std::sqrt(diff) / x.norm();
}

} // namespace detail

/// Smeared line potentials on the interior grid, row-major with the first index along x.
inline std::vector<double> line_potential(const Geometry& geometry, const GridOracleConfig& config) {
    const int n = config.mesh - 1;
    const double h = 2.0 * config.box_half_width / config.mesh;
    const auto& a = geometry.unit_vectors();
    const std::array<double, 3> c = config.couplings.value_or(std::array<double, 3>{-1.0, -1.0, geometry.lambda()});
    std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int line = 0; line < 3; ++line) {
        if (c[static_cast<std::size_t>(line)] == 0.0) continue;
        // Normal of span(A): A rotated by pi/2.
        const double nx = -a[static_cast<std::size_t>(line)].y;
        const double ny = a[static_cast<std::size_t>(line)].x;
        // Hat width chosen so the node sum across the line reproduces unit mass.
        const double width = config.delta_width_cells * h * std::max(std::abs(nx), std::abs(ny));
        for (int i = 0; i < n; ++i) {
            const double x = -config.box_half_width + (i + 1) * h;
            for (int j = 0; j < n; ++j) {
                const double y = -config.box_half_width + (j + 1) * h;
                const double d = std::abs(nx * x + ny * y);
                if (d < width) v[static_cast<std::size_t>(i) * n + j] += c[static_cast<std::size_t>(line)] * (1.0 - d / width) / width;
            }
        }
    }
    return v;
}

/// Lowest eigenvalue of the finite-difference H (dimensionless units).
inline GridOracleResult grid_oracle_ground_state(const ModelParams& params, const GridOracleConfig& config = {}) {
    validate(config);
    const Geometry geometry = derive_geometry(params);
    detail::GridHamiltonian ham(config.mesh - 1, config.box_half_width, line_potential(geometry, config), 1.0);
    const auto total = static_cast<Eigen::Index>(ham.size());

    std::mt19937 rng(config.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Eigen::VectorXd x(total);
    for (Eigen::Index i = 0; i < total; ++i) x[i] = unif(rng);
    x.normalize();

    Eigen::VectorXd hx(total), w(total), hw(total), p = Eigen::VectorXd::Zero(total), hp = Eigen::VectorXd::Zero(total);
    Eigen::VectorXd r(total);
    ham.apply(x, hx);
    double rho = x.dot(hx);
    bool have_p = false;

    GridOracleResult result;
    result.mesh = config.mesh;
    result.spacing = ham.spacing();
    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        r = hx - rho * x;
        const double rnorm = r.norm();
        result.iterations = iter;
        result.residual = rnorm;
        if (rnorm <= config.eigensolver_tol) break;
        ham.precondition(r, w);
        // Orthonormalise w, then p, against the previous basis vectors (two passes).
        for (int pass = 0; pass < 2; ++pass) w -= x.dot(w) * x;
        w.normalize();
        ham.apply(w, hw);
        int m = 2;
        if (have_p) {
            for (int pass = 0; pass < 2; ++pass) {
                const double cx = x.dot(p);
                const double cw = w.dot(p);
                p -= cx * x + cw * w;
                hp -= cx * hx + cw * hw;
            }
            const double pn = p.norm();
            if (pn > 1e-12) {
                p /= pn;
                hp /= pn;
                m = 3;
            }
        }

        // Rayleigh-Ritz on span{x, w, p}; the basis is orthonormal up to rounding.
        const Eigen::VectorXd* basis[3] = {&x, &w, &p};
        const Eigen::VectorXd* hbasis[3] = {&hx, &hw, &hp};
        Eigen::MatrixXd gram(m, m), proj(m, m);
        for (int a = 0; a < m; ++a) {
            for (int b = a; b < m; ++b) {
                gram(a, b) = gram(b, a) = basis[a]->dot(*basis[b]);
                proj(a, b) = proj(b, a) = 0.5 * (basis[a]->dot(*hbasis[b]) + basis[b]->dot(*hbasis[a]));
            }
        }
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ritz(proj, gram);
        Eigen::VectorXd coeff = Eigen::VectorXd::Zero(3);
        coeff.head(m) = ritz.eigenvectors().col(0);
        if (m == 2) have_p = false;

        // New search direction excludes the current iterate.
        Eigen::VectorXd new_p = coeff(1) * w;
        Eigen::VectorXd new_hp = coeff(1) * hw;
        if (have_p) {
            new_p += coeff(2) * p;
            new_hp += coeff(2) * hp;
        }
        x = coeff(0) * x + new_p;
        hx = coeff(0) * hx + new_hp;
        p = std::move(new_p);
        hp = std::move(new_hp);
        have_p = true;

        const double xn = x.norm();
        x /= xn;
        hx /= xn;
        rho = x.dot(hx);
        if (!std::isfinite(rho)) throw ConvergenceError("grid oracle: non-finite Rayleigh quotient", rho, rnorm);
    }
    if (result.residual > config.eigensolver_tol) {
        throw ConvergenceError("grid oracle: LOBPCG did not converge in " + std::to_string(config.max_iterations) +
                                   " iterations (residual " + std::to_string(result.residual) + ")",
                               rho, result.residual);
    }
    result.energy = rho;
    result.odd_fraction_x = detail::reflection_odd_fraction(x, config.mesh - 1, true);
    result.odd_fraction_y = detail::reflection_odd_fraction(x, config.mesh - 1, false);
    return result;
}

} // namespace skeleton
