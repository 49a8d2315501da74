#include "biplot/baselines.hpp"

#include "biplot/error.hpp"
#include "biplot/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace biplot {

MdsEmbedding classical_mds(const Matrix& distances, std::size_t dims) {
    const std::size_t n = distances.rows();
    if (n == 0 || distances.cols() != n) throw InputError("classical_mds: distance matrix must be square");
    if (!distances.all_finite()) throw InputError("classical_mds: distance matrix has non-finite entries");
    if (dims == 0) throw InputError("classical_mds: dims must be positive");

    double scale = 0.0;
    for (double v : distances.data()) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(distances(i, i)) > 1e-12 * scale)
            throw InputError("classical_mds: diagonal entry " + std::to_string(i + 1) + " is not zero");
        for (std::size_t j = 0; j < n; ++j) {
            if (distances(i, j) < 0.0) throw InputError("classical_mds: negative distance");
            if (std::abs(distances(i, j) - distances(j, i)) > 1e-9 * scale)
                throw InputError("classical_mds: distance matrix is not symmetric");
        }
    }

    // B = -1/2 H D^2 H
    Matrix sq(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sq(i, j) = distances(i, j) * distances(i, j);
    std::vector<double> row_mean(n, 0.0);
    double grand = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) row_mean[i] += sq(i, j);
        grand += row_mean[i];
        row_mean[i] /= static_cast<double>(n);
    }
    grand /= static_cast<double>(n * n);
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = -0.5 * (sq(i, j) - row_mean[i] - row_mean[j] + grand);

    const SymmetricEigen eig = symmetric_eigen(b);
    double largest = 0.0;
    for (double v : eig.values) largest = std::max(largest, std::abs(v));
    const double cut = largest * static_cast<double>(n) * 1e-12;

    std::size_t positive = 0;
    double positive_mass = 0.0;
    for (double v : eig.values)
        if (v > cut) {
            ++positive;
            positive_mass += v;
        }

    MdsEmbedding out;
    const std::size_t kept = std::min(dims, positive);
    out.truncated = kept < dims;
    out.coords = Matrix(n, kept);
    double kept_mass = 0.0;
    for (std::size_t k = 0; k < kept; ++k) {
        const double root = std::sqrt(eig.values[k]);
        out.eigenvalues.push_back(eig.values[k]);
        kept_mass += eig.values[k];
        for (std::size_t i = 0; i < n; ++i) out.coords(i, k) = eig.vectors(i, k) * root;
    }
    out.strain = positive_mass > 0.0 ? std::max(0.0, (positive_mass - kept_mass) / positive_mass) : 0.0;
    return out;
}

double chi_square(const Matrix& counts) {
    const std::size_t n = counts.rows();
    const std::size_t p = counts.cols();
    std::vector<double> row_tot(n, 0.0), col_tot(p, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            row_tot[i] += counts(i, j);
            col_tot[j] += counts(i, j);
            total += counts(i, j);
        }
    double chi2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const double expected = row_tot[i] * col_tot[j] / total;
            const double d = counts(i, j) - expected;
            chi2 += d * d / expected;
        }
    return chi2;
}

CaModel correspondence_analysis(const DataTable& table, std::size_t dims) {
    return correspondence_analysis(table.values(), dims, Labels{table.row_labels(), table.col_labels()});
}

CaModel correspondence_analysis(const Matrix& n_ij, std::size_t dims, Labels labels) {
    const std::size_t n = n_ij.rows();
    const std::size_t p = n_ij.cols();
    if (n < 2 || p < 2) throw InputError("correspondence_analysis: need at least 2 rows and 2 columns");
    if (!n_ij.all_finite()) throw InputError("correspondence_analysis: table has non-finite entries");
    if (labels.rows.empty())
        for (std::size_t i = 0; i < n; ++i) labels.rows.push_back("R" + std::to_string(i + 1));
    if (labels.cols.empty())
        for (std::size_t j = 0; j < p; ++j) labels.cols.push_back("C" + std::to_string(j + 1));
    if (labels.rows.size() != n || labels.cols.size() != p)
        throw InputError("correspondence_analysis: label counts do not match the table");

    CaModel ca;
    ca.labels = std::move(labels);
    ca.row_masses.assign(n, 0.0);
    ca.col_masses.assign(p, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const double v = n_ij(i, j);
            if (v < 0.0)
                throw InputError("correspondence analysis needs nonnegative entries; row '" + ca.labels.rows[i] +
                                 "', column '" + ca.labels.cols[j] + "' is " + std::to_string(v));
            ca.row_masses[i] += v;
            ca.col_masses[j] += v;
            total += v;
        }
    for (std::size_t i = 0; i < n; ++i)
        if (ca.row_masses[i] == 0.0)
            throw InputError("correspondence analysis: row '" + ca.labels.rows[i] + "' sums to zero");
    for (std::size_t j = 0; j < p; ++j)
        if (ca.col_masses[j] == 0.0)
            throw InputError("correspondence analysis: column '" + ca.labels.cols[j] + "' sums to zero");
    if (dims == 0 || dims > std::min(n, p) - 1)
        throw InputError("correspondence_analysis: dims " + std::to_string(dims) + " outside [1, " +
                         std::to_string(std::min(n, p) - 1) + "]");

    const auto [lightest, heaviest] = std::minmax_element(ca.col_masses.begin(), ca.col_masses.end());
    if (*heaviest > 100.0 * *lightest)
        ca.warnings.push_back("column totals span more than two orders of magnitude (mixed units); "
                              "correspondence analysis treats every entry as a count");

    for (auto& r : ca.row_masses) r /= total;
    for (auto& c : ca.col_masses) c /= total;

    Matrix residuals(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const double expected = ca.row_masses[i] * ca.col_masses[j];
            residuals(i, j) = (n_ij(i, j) / total - expected) / std::sqrt(expected);
        }

    const SvdResult s = svd(residuals);
    for (double sv : s.sigma) ca.total_inertia += sv * sv;
    ca.row_coords = Matrix(n, dims);
    ca.col_coords = Matrix(p, dims);
    for (std::size_t k = 0; k < dims; ++k) {
        ca.inertias.push_back(s.sigma[k] * s.sigma[k]);
        for (std::size_t i = 0; i < n; ++i)
            ca.row_coords(i, k) = s.u(i, k) * s.sigma[k] / std::sqrt(ca.row_masses[i]);
        for (std::size_t j = 0; j < p; ++j)
            ca.col_coords(j, k) = s.v(j, k) * s.sigma[k] / std::sqrt(ca.col_masses[j]);
    }
    return ca;
}

Matrix pca_map(const DataTable& table, std::size_t dims) {
    const auto [x, record] = preprocess(table, PreprocessMode::zscore);
    return pca_scores(x, dims);
}

} // namespace biplot
