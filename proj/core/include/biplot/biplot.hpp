#pragma once

#include "biplot/data_table.hpp"
#include "biplot/linalg.hpp"
#include "biplot/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace biplot {

/// Named factorizations. `custom` means any other gamma.
enum class BiplotType { jk, gh, sqrt, custom };

std::string_view to_string(BiplotType type) noexcept;
/// Accepts "jk", "gh" and "sqrt"; throws InputError otherwise.
BiplotType parse_biplot_type(std::string_view name);
double gamma_of(BiplotType type);
/// Maps gamma back to the named type (1 -> jk, 0 -> gh, 0.5 -> sqrt).
BiplotType type_of(double gamma) noexcept;

struct Labels {
    std::vector<std::string> rows;
    std::vector<std::string> cols;
};

/// Rank-s biplot factorization X ~ A B' of an already preprocessed matrix.
///
/// A = U_(s) diag(sigma_(s))^gamma and B = V_(s) diag(sigma_(s))^(1-gamma),
/// computed from the sign-normalized SVD of the fitted matrix. gamma = 1 is
/// the row-metric-preserving (JK) biplot, gamma = 0 the column-metric
/// preserving (GH) biplot and gamma = 0.5 the symmetric (SQRT) biplot.
struct BiplotModel {
    double gamma = 1.0;
    std::size_t dims = 2;
    Matrix row_markers;
    Matrix col_markers;
    std::vector<double> sigma_retained;
    std::vector<double> sigma_all;
    PreprocessRecord preprocess;
    Labels labels;
    SvdResult svd;  // of the fitted matrix, kept for quality diagnostics

    BiplotType type() const noexcept { return type_of(gamma); }
    std::size_t rank() const noexcept { return svd.rank; }
};

/// Throws InputError when gamma is outside [0, 1], dims is 0 or exceeds the
/// numerical rank, or the label counts do not match x. Empty label lists are
/// replaced by "R1".., "C1"...
BiplotModel fit_biplot(const Matrix& x, double gamma, std::size_t dims, Labels labels = {},
                       PreprocessRecord record = {});

BiplotModel jk(const Matrix& x, std::size_t dims = 2, Labels labels = {}, PreprocessRecord record = {});
BiplotModel gh(const Matrix& x, std::size_t dims = 2, Labels labels = {}, PreprocessRecord record = {});
BiplotModel sqrt_biplot(const Matrix& x, std::size_t dims = 2, Labels labels = {}, PreprocessRecord record = {});

/// Preprocesses the table and fits it, carrying over labels and the record.
BiplotModel fit_table(const DataTable& table, PreprocessMode mode, double gamma, std::size_t dims = 2);

struct QualityReport {
    std::vector<double> qr_rows;
    std::vector<double> qr_cols;
    double qr_overall = 0.0;
    double residual_frobenius = 0.0;

    friend bool operator==(const QualityReport&, const QualityReport&) = default;
};

/// Squared-cosine quality of representation on the retained axes.
///
/// qr_rows[i] = sum_{k<=s} (sigma_k u_ik)^2 / sum_k (sigma_k u_ik)^2 and
/// symmetrically for columns with V; qr_overall is the share of the squared
/// singular values kept. A zero row or column has nothing to lose and scores 1.
/// `x` must be the matrix the model was fitted on; a shape or norm mismatch
/// throws InputError.
QualityReport quality(const BiplotModel& model, const Matrix& x);

/// A B'.
Matrix reconstruct(const BiplotModel& model);

/// sigma_k^2 / sum sigma^2 for every axis.
std::vector<double> variance_shares(const std::vector<double>& sigma);

/// Cosines of the angles between column markers. Pairs involving a
/// zero-length marker are NaN.
Matrix column_cosines(const BiplotModel& model);

std::vector<double> column_lengths(const BiplotModel& model);

/// Euclidean distances between row markers.
Matrix row_distances(const BiplotModel& model);

/// Euclidean distances between the rows of an arbitrary matrix.
Matrix pairwise_distances(const Matrix& points);

/// Principal component scores X V_(s). x must be column-centered.
Matrix pca_scores(const Matrix& x, std::size_t dims);

/// Sample Pearson correlations between the columns of the table.
Matrix pearson(const DataTable& table);
Matrix pearson(const Matrix& values, const std::vector<std::string>& col_labels = {});

/// Length of the projection of row marker i onto the direction of column
/// marker j, times the marker's length. Equals reconstruct()(i, j).
double projected_value(const BiplotModel& model, std::size_t i, std::size_t j);

} // namespace biplot
