#pragma once

#include "biplot/biplot.hpp"
#include "biplot/data_table.hpp"
#include "biplot/matrix.hpp"

#include <string>
#include <vector>

namespace biplot {

/// Classical (Torgerson) scaling result.
struct MdsEmbedding {
    Matrix coords;                    // n x s, column-centered
    std::vector<double> eigenvalues;  // the s retained, nonincreasing
    double strain = 0.0;              // dropped / total positive eigenvalue mass
    bool truncated = false;           // fewer than the requested dims were positive
};

/// Embeds a distance matrix via the eigendecomposition of -1/2 H D^2 H.
/// Throws InputError for a non-square, asymmetric, negative or
/// nonzero-diagonal input.
MdsEmbedding classical_mds(const Matrix& distances, std::size_t dims);

/// Correspondence analysis with both rows and columns in principal coordinates.
struct CaModel {
    Matrix row_coords;
    Matrix col_coords;
    std::vector<double> inertias;  // retained axes
    double total_inertia = 0.0;    // chi-square / grand total
    std::vector<double> row_masses;
    std::vector<double> col_masses;
    Labels labels;
    std::vector<std::string> warnings;
};

/// Requires nonnegative entries without empty rows or columns and
/// 1 <= dims <= min(n, p) - 1. Column totals spanning more than two orders of
/// magnitude add a mixed-units warning.
CaModel correspondence_analysis(const DataTable& table, std::size_t dims);
/// Same on an unlabeled count matrix; empty labels become "R1".., "C1"...
CaModel correspondence_analysis(const Matrix& counts, std::size_t dims, Labels labels = {});

/// Pearson chi-square statistic of the table read as a contingency table.
double chi_square(const Matrix& counts);

/// Principal component map: z-score then project on the leading axes.
Matrix pca_map(const DataTable& table, std::size_t dims);

} // namespace biplot
