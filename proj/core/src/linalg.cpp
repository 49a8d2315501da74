#include "biplot/linalg.hpp"

#include "biplot/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace biplot {
namespace {

constexpr int kMaxSweeps = 80;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::vector<std::size_t> descending_order(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return order;
}

// index of the largest |entry| in column k; first index wins on ties
std::size_t dominant_entry(const Matrix& m, std::size_t k) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double a = std::abs(m(i, k));
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    return best;
}

void negate_column(Matrix& m, std::size_t k) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, k) = -m(i, k);
}

// Fill columns flagged in `missing` with unit vectors orthogonal to every other column.
void complete_orthonormal(Matrix& u, const std::vector<bool>& missing) {
    const std::size_t n = u.rows();
    std::vector<std::size_t> filled;
    for (std::size_t k = 0; k < u.cols(); ++k)
        if (!missing[k]) filled.push_back(k);

    std::size_t candidate = 0;
    for (std::size_t k = 0; k < u.cols(); ++k) {
        if (!missing[k]) continue;
        for (; candidate < n; ++candidate) {
            std::vector<double> e(n, 0.0);
            e[candidate] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t f : filled) {
                    double proj = 0.0;
                    for (std::size_t i = 0; i < n; ++i) proj += u(i, f) * e[i];
                    for (std::size_t i = 0; i < n; ++i) e[i] -= proj * u(i, f);
                }
            }
            const double len = norm(e);
            if (len > 0.5) {
                for (std::size_t i = 0; i < n; ++i) u(i, k) = e[i] / len;
                filled.push_back(k);
                ++candidate;
                break;
            }
        }
    }
}

// n >= p. Orthogonalizes the columns of `work` in place, accumulating the rotations in v.
void jacobi_sweeps(Matrix& work, Matrix& v) {
    const std::size_t n = work.rows();
    const std::size_t p = work.cols();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t j = 0; j + 1 < p; ++j) {
            for (std::size_t k = j + 1; k < p; ++k) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double a = work(i, j), b = work(i, k);
                    alpha += a * a;
                    beta += b * b;
                    gamma += a * b;
                }
                if (gamma == 0.0 || std::abs(gamma) <= kEps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < n; ++i) {
                    const double a = work(i, j), b = work(i, k);
                    work(i, j) = c * a - s * b;
                    work(i, k) = s * a + c * b;
                }
                for (std::size_t i = 0; i < p; ++i) {
                    const double a = v(i, j), b = v(i, k);
                    v(i, j) = c * a - s * b;
                    v(i, k) = s * a + c * b;
                }
            }
        }
        if (!rotated) return;
    }
    throw NumericalError("svd: Jacobi sweeps did not converge after " + std::to_string(kMaxSweeps) + " sweeps");
}

SvdResult svd_tall(const Matrix& m) {
    const std::size_t n = m.rows();
    const std::size_t p = m.cols();
    Matrix work = m;
    Matrix v = Matrix::identity(p);
    jacobi_sweeps(work, v);

    std::vector<double> norms(p);
    for (std::size_t k = 0; k < p; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += work(i, k) * work(i, k);
        norms[k] = std::sqrt(s);
    }
    const auto order = descending_order(norms);

    SvdResult out;
    out.u = Matrix(n, p);
    out.v = Matrix(p, p);
    out.sigma.resize(p);
    for (std::size_t k = 0; k < p; ++k) {
        const std::size_t src = order[k];
        out.sigma[k] = norms[src];
        for (std::size_t i = 0; i < p; ++i) out.v(i, k) = v(i, src);
        for (std::size_t i = 0; i < n; ++i) out.u(i, k) = work(i, src);
    }

    const double tol = rank_tolerance(out.sigma, n, p);
    std::vector<bool> missing(p, false);
    for (std::size_t k = 0; k < p; ++k) {
        if (out.sigma[k] > tol) {
            ++out.rank;
            for (std::size_t i = 0; i < n; ++i) out.u(i, k) /= out.sigma[k];
        } else {
            missing[k] = true;
        }
    }
    complete_orthonormal(out.u, missing);
    return out;
}

} // namespace

double rank_tolerance(const std::vector<double>& sigma, std::size_t rows, std::size_t cols) {
    if (sigma.empty()) return 0.0;
    return sigma.front() * static_cast<double>(std::max(rows, cols)) * 1e-12;
}

SvdResult svd(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw InputError("svd: empty matrix");
    if (!m.all_finite()) throw InputError("svd: matrix contains non-finite entries");

    if (m.rows() >= m.cols()) return sign_normalize(svd_tall(m));

    SvdResult t = svd_tall(m.transpose());
    SvdResult out;
    out.u = std::move(t.v);
    out.v = std::move(t.u);
    out.sigma = std::move(t.sigma);
    out.rank = t.rank;
    return sign_normalize(std::move(out));
}

SvdResult sign_normalize(SvdResult s) {
    for (std::size_t k = 0; k < s.v.cols(); ++k) {
        if (s.v(dominant_entry(s.v, k), k) < 0.0) {
            negate_column(s.v, k);
            negate_column(s.u, k);
        }
    }
    return s;
}

Matrix low_rank_approx(const SvdResult& s, std::size_t dims) {
    if (dims == 0 || dims > s.size())
        throw InputError("low_rank_approx: dims " + std::to_string(dims) + " outside [1, " +
                         std::to_string(s.size()) + "]");
    Matrix out(s.u.rows(), s.v.rows());
    for (std::size_t k = 0; k < dims; ++k) {
        for (std::size_t i = 0; i < s.u.rows(); ++i) {
            const double us = s.u(i, k) * s.sigma[k];
            for (std::size_t j = 0; j < s.v.rows(); ++j) out(i, j) += us * s.v(j, k);
        }
    }
    return out;
}

double tail_norm(const SvdResult& s, std::size_t dims) {
    double sum = 0.0;
    for (std::size_t k = dims; k < s.size(); ++k) sum += s.sigma[k] * s.sigma[k];
    return std::sqrt(sum);
}

SymmetricEigen symmetric_eigen(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0 || m.cols() != n) throw InputError("symmetric_eigen: matrix must be square and non-empty");
    if (!m.all_finite()) throw InputError("symmetric_eigen: matrix contains non-finite entries");

    Matrix a = m;
    // symmetrize to remove rounding asymmetry from callers
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
    Matrix v = Matrix::identity(n);

    bool converged = n == 1;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            diag += a(i, i) * a(i, i);
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        }
        if (off == 0.0 || off <= kEps * kEps * diag) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) throw NumericalError("symmetric_eigen: Jacobi rotations did not converge");

    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
    const auto order = descending_order(diag);
    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = diag[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
        if (out.vectors(dominant_entry(out.vectors, k), k) < 0.0) negate_column(out.vectors, k);
    }
    return out;
}

} // namespace biplot
