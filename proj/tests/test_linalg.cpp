#include "test_support.hpp"

#include <biplot/error.hpp>
#include <biplot/linalg.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace biplot;
using biplot::testing::oracle_singular_values;
using biplot::testing::random_matrix;

namespace {

double orthonormality_error(const Matrix& q) {
    return max_abs_diff(q.transpose() * q, Matrix::identity(q.cols()));
}

Matrix reconstruct_full(const SvdResult& s) { return low_rank_approx(s, s.size()); }

SvdResult make_svd(Matrix u, std::vector<double> sigma, Matrix v) {
    SvdResult s;
    s.u = std::move(u);
    s.sigma = std::move(sigma);
    s.v = std::move(v);
    s.rank = s.sigma.size();
    return s;
}

} // namespace

TEST(Svd, IdentityHasUnitSingularValues) {
    const SvdResult s = svd(Matrix::identity(2));
    ASSERT_EQ(s.size(), 2u);
    EXPECT_DOUBLE_EQ(s.sigma[0], 1.0);
    EXPECT_DOUBLE_EQ(s.sigma[1], 1.0);
    EXPECT_EQ(s.rank, 2u);
    EXPECT_LE(max_abs_diff(reconstruct_full(s), Matrix::identity(2)), 1e-15);
}

TEST(Svd, DiagonalWithNegativeEntryAbsorbsSign) {
    const Matrix m{{3, 0}, {0, -2}};
    const SvdResult s = svd(m);
    EXPECT_NEAR(s.sigma[0], 3.0, 1e-15);
    EXPECT_NEAR(s.sigma[1], 2.0, 1e-15);
    EXPECT_LE(max_abs_diff(reconstruct_full(s), m), 1e-15);
}

TEST(Svd, RankOneSymmetric) {
    const SvdResult s = svd(Matrix{{1, 1}, {1, 1}});
    EXPECT_NEAR(s.sigma[0], 2.0, 1e-15);
    EXPECT_EQ(s.sigma[1], 0.0);
    EXPECT_EQ(s.rank, 1u);
    // the completed U column keeps U orthonormal
    EXPECT_LE(orthonormality_error(s.u), 1e-15);
}

TEST(Svd, WideMatricesGoThroughTheTranspose) {
    std::mt19937_64 rng(7);
    const Matrix m = random_matrix(3, 7, rng);
    const SvdResult s = svd(m);
    EXPECT_EQ(s.u.rows(), 3u);
    EXPECT_EQ(s.v.rows(), 7u);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_LE(frobenius_norm(m - reconstruct_full(s)) / frobenius_norm(m), 1e-13);
    EXPECT_LE(orthonormality_error(s.u), 1e-13);
    EXPECT_LE(orthonormality_error(s.v), 1e-13);
}

TEST(Svd, RejectsNonFiniteAndEmptyInput) {
    Matrix m{{1, 2}, {3, 4}};
    m(1, 0) = std::nan("");
    EXPECT_THROW(svd(m), InputError);
    m(1, 0) = INFINITY;
    EXPECT_THROW(svd(m), InputError);
    EXPECT_THROW(svd(Matrix{}), InputError);
}

TEST(Svd, SingleEntry) {
    const SvdResult s = svd(Matrix{{-4}});
    EXPECT_DOUBLE_EQ(s.sigma[0], 4.0);
    EXPECT_DOUBLE_EQ(s.v(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(s.u(0, 0), -1.0);
}

TEST(Svd, ZeroMatrixHasRankZeroAndOrthonormalFactors) {
    const SvdResult s = svd(Matrix(4, 3));
    EXPECT_EQ(s.rank, 0u);
    for (double v : s.sigma) EXPECT_EQ(v, 0.0);
    EXPECT_LE(orthonormality_error(s.u), 1e-15);
    EXPECT_LE(orthonormality_error(s.v), 1e-15);
}

TEST(SignNormalize, FlipsWhenDominantEntryIsNegative) {
    const double r = std::sqrt(0.5);
    const SvdResult s = sign_normalize(make_svd(Matrix{{r}, {r}}, {1.0}, Matrix{{-0.8}, {0.6}}));
    EXPECT_DOUBLE_EQ(s.v(0, 0), 0.8);
    EXPECT_DOUBLE_EQ(s.v(1, 0), -0.6);
    EXPECT_DOUBLE_EQ(s.u(0, 0), -r);
    EXPECT_DOUBLE_EQ(s.u(1, 0), -r);
}

TEST(SignNormalize, LeavesCanonicalColumnAlone) {
    const SvdResult s = sign_normalize(make_svd(Matrix{{1}, {0}}, {1.0}, Matrix{{0.6}, {0.8}}));
    EXPECT_DOUBLE_EQ(s.v(0, 0), 0.6);
    EXPECT_DOUBLE_EQ(s.v(1, 0), 0.8);
    EXPECT_DOUBLE_EQ(s.u(0, 0), 1.0);
}

TEST(SignNormalize, MagnitudeTieIsDecidedByFirstIndex) {
    const SvdResult s = sign_normalize(make_svd(Matrix{{1}, {0}}, {1.0}, Matrix{{0.5}, {-0.5}}));
    EXPECT_DOUBLE_EQ(s.v(0, 0), 0.5);
    EXPECT_DOUBLE_EQ(s.v(1, 0), -0.5);
    const SvdResult t = sign_normalize(make_svd(Matrix{{1}, {0}}, {1.0}, Matrix{{-0.5}, {0.5}}));
    EXPECT_DOUBLE_EQ(t.v(0, 0), 0.5);
    EXPECT_DOUBLE_EQ(t.u(0, 0), -1.0);
}

TEST(SignNormalize, ReconstructionUnchanged) {
    std::mt19937_64 rng(11);
    const Matrix m = random_matrix(5, 3, rng);
    SvdResult s = svd(m);
    for (std::size_t i = 0; i < s.v.rows(); ++i) s.v(i, 1) = -s.v(i, 1);
    for (std::size_t i = 0; i < s.u.rows(); ++i) s.u(i, 1) = -s.u(i, 1);
    const SvdResult n = sign_normalize(s);
    EXPECT_LE(max_abs_diff(reconstruct_full(n), reconstruct_full(s)), 1e-15);
    EXPECT_EQ(n.v, svd(m).v);
}

TEST(LowRankApprox, ExactForRankOneInput) {
    const Matrix m{{1, 2}, {2, 4}};
    const Matrix approx = low_rank_approx(svd(m), 1);
    EXPECT_LE(frobenius_norm(m - approx), 1e-14);
}

TEST(LowRankApprox, DiagonalTruncation) {
    const Matrix m{{3, 0}, {0, 1}};
    const SvdResult s = svd(m);
    const Matrix approx = low_rank_approx(s, 1);
    EXPECT_LE(max_abs_diff(approx, Matrix{{3, 0}, {0, 0}}), 1e-15);
    EXPECT_NEAR(frobenius_norm(m - approx), 1.0, 1e-15);
    EXPECT_NEAR(tail_norm(s, 1), 1.0, 1e-15);
}

TEST(LowRankApprox, ResidualMatchesTailSingularValues) {
    // oracle: direct Frobenius norm of the difference against the tail of an independent SVD
    std::mt19937_64 rng(20240501);
    const Matrix m = random_matrix(5, 4, rng);
    const auto oracle = oracle_singular_values(m);
    const double oracle_tail = std::sqrt(oracle(2) * oracle(2) + oracle(3) * oracle(3));
    const Matrix approx = low_rank_approx(svd(m), 2);
    EXPECT_NEAR(frobenius_norm(m - approx), oracle_tail, 1e-9);
}

TEST(LowRankApprox, RejectsDimsOutOfRange) {
    const SvdResult s = svd(Matrix::identity(3));
    EXPECT_THROW(low_rank_approx(s, 4), InputError);
    EXPECT_THROW(low_rank_approx(s, 0), InputError);
}

// Property suite over random shapes up to 12 x 8.
class SvdProperties : public ::testing::TestWithParam<int> {};

TEST_P(SvdProperties, ReconstructionOrthonormalityOrderingAndOracle) {
    std::mt19937_64 rng(1000 + GetParam());
    std::uniform_int_distribution<std::size_t> shape(1, 12);
    const std::size_t n = shape(rng);
    const std::size_t p = std::min<std::size_t>(shape(rng), 8);
    const Matrix m = random_matrix(n, p, rng, -5.0, 5.0);
    const SvdResult s = svd(m);

    EXPECT_LE(frobenius_norm(m - reconstruct_full(s)) / frobenius_norm(m), 1e-10);
    EXPECT_LE(orthonormality_error(s.u), 1e-10);
    EXPECT_LE(orthonormality_error(s.v), 1e-10);
    for (std::size_t k = 0; k + 1 < s.size(); ++k) EXPECT_GE(s.sigma[k], s.sigma[k + 1]);
    EXPECT_GE(s.sigma.back(), 0.0);

    const auto oracle = oracle_singular_values(m);
    for (std::size_t k = 0; k < s.size(); ++k) EXPECT_NEAR(s.sigma[k], oracle(k), 1e-10 * oracle(0));

    // determinism
    const SvdResult again = svd(m);
    EXPECT_EQ(again.u, s.u);
    EXPECT_EQ(again.v, s.v);
    EXPECT_EQ(again.sigma, s.sigma);

    // scale equivariance
    const SvdResult scaled = svd(3.5 * m);
    for (std::size_t k = 0; k < s.size(); ++k) EXPECT_NEAR(scaled.sigma[k], 3.5 * s.sigma[k], 1e-12 * 3.5 * s.sigma[0]);
}

INSTANTIATE_TEST_SUITE_P(Random, SvdProperties, ::testing::Range(0, 60));

TEST(SvdProperties, EckartYoungBeatsRandomRankTwoCompetitors) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = random_matrix(6, 4, rng);
        const double best = frobenius_norm(m - low_rank_approx(svd(m), 2));
        for (int c = 0; c < 50; ++c) {
            const Matrix competitor = random_matrix(6, 2, rng) * random_matrix(2, 4, rng);
            EXPECT_LE(best, frobenius_norm(m - competitor));
        }
    }
}

TEST(Svd, RepeatedSingularValuesCompareProjectors) {
    // diag(2, 2, 1) rotated: the 2-dimensional leading subspace is unique, its basis is not
    std::mt19937_64 rng(5);
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(biplot::testing::to_eigen(random_matrix(3, 3, rng)))
                                  .householderQ();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
    d.diagonal() << 2, 2, 1;
    const Matrix m = biplot::testing::from_eigen(q * d * q.transpose());
    const SvdResult s = svd(m);
    EXPECT_NEAR(s.sigma[0], 2.0, 1e-12);
    EXPECT_NEAR(s.sigma[1], 2.0, 1e-12);
    const Matrix v2 = s.v.leading_columns(2);
    const Eigen::MatrixXd q2 = q.leftCols(2);
    const Matrix oracle_projector = biplot::testing::from_eigen(q2 * q2.transpose());
    EXPECT_LE(max_abs_diff(v2 * v2.transpose(), oracle_projector), 1e-12);
}

TEST(SymmetricEigen, MatchesOracleAndIsSorted) {
    std::mt19937_64 rng(3);
    const Matrix a = random_matrix(6, 6, rng);
    const Matrix sym = a.transpose() * a;
    const SymmetricEigen e = symmetric_eigen(sym);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(biplot::testing::to_eigen(sym));
    for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(e.values[k], oracle.eigenvalues()(5 - k), 1e-10);
    EXPECT_LE(orthonormality_error(e.vectors), 1e-12);
    Matrix lambda(6, 6);
    for (std::size_t k = 0; k < 6; ++k) lambda(k, k) = e.values[k];
    EXPECT_LE(max_abs_diff(e.vectors * lambda * e.vectors.transpose(), sym), 1e-10);
}

TEST(SymmetricEigen, RejectsNonSquare) { EXPECT_THROW(symmetric_eigen(Matrix(2, 3)), InputError); }
