#pragma once

#include "biplot/matrix.hpp"

#include <cstddef>
#include <vector>

namespace biplot {

/// Thin singular value decomposition X = U diag(sigma) V'.
///
/// U is n x r, V is p x r with r = min(n, p); both column-orthonormal.
/// sigma is nonincreasing. `rank` counts singular values above
/// rank_tolerance(). Columns of U belonging to (numerically) zero singular
/// values are completed to an orthonormal set, so U'U = I always holds.
struct SvdResult {
    Matrix u;
    std::vector<double> sigma;
    Matrix v;
    std::size_t rank = 0;

    std::size_t size() const noexcept { return sigma.size(); }
};

/// sigma[0] * max(n, p) * 1e-12; singular values at or below this count as zero.
double rank_tolerance(const std::vector<double>& sigma, std::size_t rows, std::size_t cols);

/// One-sided Jacobi SVD, sign-normalized. Throws InputError on non-finite or
/// empty input and NumericalError when the sweeps do not converge.
SvdResult svd(const Matrix& m);

/// Flips singular vector pairs so that the largest-magnitude entry of each V
/// column is nonnegative (first index wins on exact ties).
SvdResult sign_normalize(SvdResult s);

/// U_(dims) diag(sigma_(dims)) V'_(dims).
Matrix low_rank_approx(const SvdResult& s, std::size_t dims);

/// sqrt(sum_{k >= dims} sigma_k^2): the Frobenius residual of low_rank_approx.
double tail_norm(const SvdResult& s, std::size_t dims);

struct SymmetricEigen {
    std::vector<double> values;  // nonincreasing
    Matrix vectors;              // column k pairs with values[k]
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Eigenvectors are
/// sign-normalized with the same rule as sign_normalize().
SymmetricEigen symmetric_eigen(const Matrix& m);

} // namespace biplot
