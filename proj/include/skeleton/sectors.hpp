#pragma once

// Effective skeletons of the four parity sectors and the bound-state search.
//
// With k > 1/sqrt(2) and E = -k^2, E is an eigenvalue of H exactly when the
// effective skeleton of some sector has a non-trivial kernel, and the
// multiplicity equals the kernel dimension. Per sector, on L^2(0, inf):
//
//   PP, MP:  S(k) = k - T_0 - T_12 + 2 T_23 (T_0 + k/lambda)^{-1} T_23
//   PM, MM:  S(k) = k - T_0 + T_12
//
// with even blocks for PP, PM and odd blocks for MP, MM. T_0 is diagonal on
// the Fourier side, so the middle resolvent is a diagonal matrix.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skeleton/error.hpp"
#include "skeleton/geometry.hpp"
#include "skeleton/kernels.hpp"
#include "skeleton/operators.hpp"
#include "skeleton/quadrature.hpp"

namespace skeleton {

/// Sector labels. First sign: parity of the skeleton channel function;
/// second sign: symmetry under exchange of the two identical particles.
/// Subspaces of L^2(R^2): PP <-> Ran pi1+ pi2+, MP <-> Ran pi1+ pi2-,
/// PM <-> Ran pi1- pi2-, MM <-> Ran pi1- pi2+.
enum class SectorId { PP, MP, PM, MM };

inline constexpr SectorId kAllSectors[] = {SectorId::PP, SectorId::MP, SectorId::PM, SectorId::MM};

inline std::string to_string(SectorId sector) {
    switch (sector) {
        case SectorId::PP: return "PP";
        case SectorId::MP: return "MP";
        case SectorId::PM: return "PM";
        case SectorId::MM: return "MM";
    }
    return "?";
}

inline SectorId parse_sector(std::string_view text) {
    if (text == "PP" || text == "++") return SectorId::PP;
    if (text == "MP" || text == "-+") return SectorId::MP;
    if (text == "PM" || text == "+-") return SectorId::PM;
    if (text == "MM" || text == "--") return SectorId::MM;
    throw DomainError("unknown sector '" + std::string(text) + "' (expected PP, MP, PM or MM)");
}

inline Parity block_parity(SectorId sector) {
    return (sector == SectorId::PP || sector == SectorId::PM) ? Parity::even : Parity::odd;
}

inline bool has_third_channel(SectorId sector) { return sector == SectorId::PP || sector == SectorId::MP; }

/// Assembled pieces of one effective skeleton, reusable across k.
struct SectorSkeleton {
    SectorId sector = SectorId::PP;
    Geometry geometry;
    std::shared_ptr<const HalfLineGrid> grid;
    Vector t0_diag;
    DiscretizedOperator t12_block;
    std::optional<DiscretizedOperator> t23_block;

    double lambda() const { return geometry.lambda(); }
};

inline SectorSkeleton build_sector(const Geometry& geometry, SectorId sector, std::shared_ptr<const HalfLineGrid> grid) {
    const Parity parity = block_parity(sector);
    const std::string tag = parity == Parity::even ? "+" : "-";
    const KernelAngle<double> a12{geometry.cos12(), geometry.sin12()};
    auto t12 = assemble([&](double p, double q) { return t_theta_parity(a12, parity, p, q); }, grid,
                        "T" + tag + "_12");
    std::optional<DiscretizedOperator> t23;
    if (has_third_channel(sector)) {
        const KernelAngle<double> a23{geometry.cos23(), geometry.sin23()};
        t23 = assemble([&](double p, double q) { return t_theta_parity(a23, parity, p, q); }, grid, "T" + tag + "_23");
    }
    Vector t0(static_cast<Eigen::Index>(grid->size()));
    for (std::size_t i = 0; i < grid->size(); ++i) t0(static_cast<Eigen::Index>(i)) = t0_symbol(grid->nodes[i]);
    return SectorSkeleton{sector, geometry, std::move(grid), std::move(t0), std::move(t12), std::move(t23)};
}

inline SectorSkeleton build_sector(const Geometry& geometry, SectorId sector, const HalfLineGrid& grid) {
    return build_sector(geometry, sector, share(grid));
}

/// Matrix of S(k) for the sector.
inline Matrix evaluate_matrix(const SectorSkeleton& skeleton, double k) {
    if (!(k > threshold_k<double>()) || !std::isfinite(k)) {
        throw DomainError("skeleton needs k > 1/sqrt(2) (got " + std::to_string(k) + ")");
    }
    const Matrix& t12 = skeleton.t12_block.matrix;
    Matrix s(t12.rows(), t12.cols());
    if (skeleton.t23_block) {
        const Matrix& b = skeleton.t23_block->matrix;
        const double k_over_lambda = k / skeleton.lambda();
        const Vector d = (skeleton.t0_diag.array() + k_over_lambda).inverse().matrix();
        // 2 B D B, symmetric by construction.
        s.noalias() = 2.0 * (b * d.asDiagonal()) * b;
        s -= t12;
    } else {
        s = t12;
    }
    s.diagonal().array() += k - skeleton.t0_diag.array();
    return s;
}

inline DiscretizedOperator evaluate(const SectorSkeleton& skeleton, double k) {
    return DiscretizedOperator{evaluate_matrix(skeleton, k), skeleton.grid,
                               "S_" + to_string(skeleton.sector) + "(" + std::to_string(k) + ")"};
}

inline Vector skeleton_eigenvalues(const SectorSkeleton& skeleton, double k) {
    return eigen_symmetric(evaluate_matrix(skeleton, k), false).eigenvalues;
}

/// k beyond which S(k) is positive definite: S(k) >= k - lambda_max(T_0 -/+ T_12)
/// because the Schur term is positive semi-definite.
inline double positivity_bound(const SectorSkeleton& skeleton) {
    Matrix base = has_third_channel(skeleton.sector) ? Matrix(skeleton.t12_block.matrix)
                                                     : Matrix(-skeleton.t12_block.matrix);
    base.diagonal() += skeleton.t0_diag;
    return eigen_symmetric(base, false).max();
}

struct CurveSample {
    double k = 0.0;
    Vector eigenvalues;
    /// max_i |lambda_i(k) - lambda_i(k_prev)| / |k - k_prev|; zero for the first sample.
    double slope_bound = 0.0;
};

inline std::vector<CurveSample> min_eigenvalue_curve(const SectorSkeleton& skeleton, const std::vector<double>& k_values) {
    std::vector<CurveSample> curve;
    curve.reserve(k_values.size());
    for (const double k : k_values) {
        CurveSample sample{k, skeleton_eigenvalues(skeleton, k), 0.0};
        if (!curve.empty()) {
            const auto& prev = curve.back();
            const double dk = std::abs(k - prev.k);
            if (dk > 0.0) sample.slope_bound = (sample.eigenvalues - prev.eigenvalues).cwiseAbs().maxCoeff() / dk;
        }
        curve.push_back(std::move(sample));
    }
    return curve;
}

struct BoundStateResult {
    SectorId sector = SectorId::PP;
    double mass_ratio = 0.0;
    double charge = 0.0;
    double k_star = 0.0;
    double energy_dimensionless = 0.0;  ///< -k_star^2, eigenvalue of the scaled H
    double energy_physical = 0.0;       ///< energy_dimensionless times the energy scale
    int multiplicity = 0;
    int grid_n = 0;
    double residual = 0.0;                  ///< |eigenvalue of S(k_star)| closest to zero
    std::vector<double> eigenvector_samples;  ///< channel function at grid nodes (weights removed)
};

struct SolveOptions {
    double k_max = 10.0;
    double k_step = 0.01;
    double tol = 1e-12;
    /// Lowest scanned k is 1/sqrt(2) + threshold_offset (the threshold itself is excluded).
    double threshold_offset = 1e-9;
    UnitSystem units{};
};

namespace detail {

// Illinois-modified regula falsi for the i-th sorted eigenvalue on a sign-changing bracket.
inline double bracket_root(const SectorSkeleton& skeleton, Eigen::Index index, double a, double fa, double b,
                           double fb, double tol) {
    int side = 0;
    for (int iter = 0; iter < 300; ++iter) {
        double c = (a * fb - b * fa) / (fb - fa);
        // Keep the iterate strictly inside; fall back to bisection on stagnation.
        if (!(c > std::min(a, b) && c < std::max(a, b))) c = 0.5 * (a + b);
        const double fc = skeleton_eigenvalues(skeleton, c)(index);
        if (std::abs(fc) <= tol) return c;
        if ((fc < 0.0) == (fa < 0.0)) {
            a = c;
            fa = fc;
            if (side == -1) fb *= 0.5;
            side = -1;
        } else {
            b = c;
            fb = fc;
            if (side == 1) fa *= 0.5;
            side = 1;
        }
        if (std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b))) {
            return std::abs(fa) < std::abs(fb) ? a : b;
        }
    }
    return std::abs(fa) < std::abs(fb) ? a : b;
}

} // namespace detail

/// All k in (1/sqrt(2), k_max] where an eigenvalue branch of S(k) vanishes,
/// ordered by descending k (ground state first).
inline std::vector<BoundStateResult> solve_bound_states(const SectorSkeleton& skeleton, const SolveOptions& options = {}) {
    const double k_threshold = threshold_k<double>();
    if (!(options.k_max > k_threshold)) throw DomainError("k_max must exceed 1/sqrt(2)");
    if (!(options.tol > 0.0) || !(options.k_step > 0.0)) throw DomainError("solver tolerances must be positive");

    const double k_low = k_threshold + options.threshold_offset;
    // No eigenvalue can vanish above the positivity bound of the discretized operator.
    const double k_start = std::max(k_low, std::min(options.k_max, positivity_bound(skeleton) + options.k_step));

    std::vector<double> ks;
    for (double k = k_start; k > k_low; k -= options.k_step) ks.push_back(k);
    ks.push_back(k_low);

    std::vector<double> roots;
    Vector prev = skeleton_eigenvalues(skeleton, ks.front());
    for (std::size_t j = 1; j < ks.size(); ++j) {
        Vector cur = skeleton_eigenvalues(skeleton, ks[j]);
        for (Eigen::Index i = 0; i < cur.size(); ++i) {
            const double fa = prev(i);
            const double fb = cur(i);
            if (fa == 0.0) {
                roots.push_back(ks[j - 1]);
            } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
                roots.push_back(detail::bracket_root(skeleton, i, ks[j - 1], fa, ks[j], fb, options.tol));
            }
        }
        prev = std::move(cur);
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    std::vector<double> unique_roots;
    for (const double r : roots) {
        if (unique_roots.empty() || std::abs(unique_roots.back() - r) > 1e-8) unique_roots.push_back(r);
    }

    const EnergyScale scale = energy_scale(skeleton.geometry, options.units);
    std::vector<BoundStateResult> results;
    for (const double k : unique_roots) {
        const Spectrum spectrum = eigen_symmetric(evaluate_matrix(skeleton, k), true);
        Eigen::Index closest = 0;
        spectrum.eigenvalues.cwiseAbs().minCoeff(&closest);
        int multiplicity = 0;
        for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i)
            if (std::abs(spectrum.eigenvalues(i)) <= 10.0 * options.tol) ++multiplicity;
        BoundStateResult r;
        r.sector = skeleton.sector;
        r.mass_ratio = skeleton.geometry.mass_ratio();
        r.charge = skeleton.geometry.charge();
        r.k_star = k;
        r.energy_dimensionless = -k * k;
        r.energy_physical = scale.to_physical(r.energy_dimensionless);
        r.multiplicity = std::max(multiplicity, 1);
        r.grid_n = static_cast<int>(skeleton.grid->size());
        r.residual = std::abs(spectrum.eigenvalues(closest));
        const auto& v = *spectrum.eigenvectors;
        r.eigenvector_samples.resize(skeleton.grid->size());
        for (std::size_t i = 0; i < skeleton.grid->size(); ++i) {
            r.eigenvector_samples[i] = v(static_cast<Eigen::Index>(i), closest) / std::sqrt(skeleton.grid->weights[i]);
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace skeleton
