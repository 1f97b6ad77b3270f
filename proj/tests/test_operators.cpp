#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "skeleton/kernels.hpp"
#include "skeleton/operators.hpp"

using namespace skeleton;

namespace {
std::shared_ptr<const HalfLineGrid> grid(int n) { return share(build_grid({n, 2.0})); }
}

TEST(Operators, ZeroKernel) {
    const auto op = assemble([](double, double) { return 0.0; }, grid(20), "zero");
    EXPECT_EQ(op.matrix.norm(), 0.0);
    EXPECT_EQ(op.label, "zero");
}

TEST(Operators, SeparableKernelRankOne) {
    const auto op = assemble([](double p, double q) { return std::exp(-p) * std::exp(-q); }, grid(200), "sep");
    const auto spec = eigen_symmetric(op);
    EXPECT_NEAR(spec.max(), 0.5, 1e-8);
    EXPECT_NEAR(spec.eigenvalues(spec.eigenvalues.size() - 2), 0.0, 1e-12);
}

TEST(Operators, ParityBlockSigns) {
    const auto g = grid(200);
    const auto angle = kernel_angle(2.0 * std::numbers::pi / 3.0);
    const auto even = eigen_symmetric(assemble([&](double p, double q) { return t_theta_parity(angle, Parity::even, p, q); }, g, "T+"));
    const auto odd = eigen_symmetric(assemble([&](double p, double q) { return t_theta_parity(angle, Parity::odd, p, q); }, g, "T-"));
    EXPECT_GE(even.min(), -1e-10);
    EXPECT_LE(odd.max(), 1e-10);
}

TEST(Operators, NonFiniteKernelNamesNodes) {
    try {
        assemble([](double p, double) { return p > 1.0 ? std::nan("") : 1.0; }, grid(20), "bad");
        FAIL() << "expected AssemblyError";
    } catch (const AssemblyError& e) {
        EXPECT_NE(std::string(e.what()).find("bad"), std::string::npos);
    }
}

TEST(Operators, Diagonal) {
    const auto g = grid(50);
    const auto id = assemble_diagonal([](double) { return 1.0; }, g, "id");
    EXPECT_TRUE(id.matrix.isIdentity(0.0));
    const auto t0 = assemble_diagonal([](double p) { return t0_symbol(p); }, g, "t0");
    for (Eigen::Index i = 0; i < t0.matrix.rows(); ++i) {
        EXPECT_GT(t0.matrix(i, i), 0.0);
        EXPECT_LT(t0.matrix(i, i), 1.0 / std::numbers::sqrt2);
    }
    EXPECT_EQ(t0.matrix.diagonal().maxCoeff(), t0_symbol(g->nodes.front()));
}

TEST(Operators, EigenSolverBasics) {
    Matrix d = Matrix::Zero(3, 3);
    d.diagonal() << 3.0, 1.0, 2.0;
    const auto s = eigen_symmetric(d);
    EXPECT_DOUBLE_EQ(s.eigenvalues(0), 1.0);
    EXPECT_DOUBLE_EQ(s.eigenvalues(1), 2.0);
    EXPECT_DOUBLE_EQ(s.eigenvalues(2), 3.0);

    Matrix swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    const auto t = eigen_symmetric(swap, true);
    EXPECT_NEAR(t.min(), -1.0, 1e-15);
    EXPECT_NEAR(t.max(), 1.0, 1e-15);
    ASSERT_TRUE(t.eigenvectors.has_value());
    EXPECT_LE(max_relative_residual(swap, t), 1e-14);
}

TEST(Operators, EigenResidualOnKernelMatrix) {
    const auto op = assemble([](double p, double q) { return t_theta(2.0, p, q); }, grid(150), "T");
    const auto s = eigen_symmetric(op, true);
    EXPECT_LE(max_relative_residual(op.matrix, s), 1e-12);
}

TEST(Operators, HilbertSchmidtNorms) {
    EXPECT_NEAR(hs_norm([](double p, double q) { return std::exp(-p - q); }, 1e-10), 0.5, 1e-9);
    EXPECT_EQ(hs_norm([](double, double) { return 0.0; }, 1e-10), 0.0);
    const double tilde = hs_norm([](double p, double q) { return tilde_kernel_mm(p, q); }, 1e-9);
    EXPECT_NEAR(tilde, 1.0132733, 2e-6);
    EXPECT_GE(tilde, 1.0);
    EXPECT_LE(tilde, 1.02);
}

TEST(Operators, FrobeniusMatchesHilbertSchmidt) {
    const auto op = assemble([](double p, double q) { return std::exp(-p - q); }, grid(200), "sep");
    EXPECT_NEAR(frobenius_norm(op), 0.5, 1e-8);
}
