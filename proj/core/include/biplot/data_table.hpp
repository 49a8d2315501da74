#pragma once

#include "biplot/matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace biplot {

/// Labeled n x p table: rows are cases, columns are variables.
///
/// Construction validates the shape (n >= 3, p >= 2), label uniqueness on
/// each axis, and finiteness of every value.
class DataTable {
public:
    DataTable(std::string name, std::vector<std::string> row_labels, std::vector<std::string> col_labels,
              Matrix values);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
    const Matrix& values() const noexcept { return values_; }
    std::size_t rows() const noexcept { return values_.rows(); }
    std::size_t cols() const noexcept { return values_.cols(); }

    /// Throws InputError when the label is absent.
    std::size_t row_index(std::string_view label) const;
    std::size_t col_index(std::string_view label) const;

    friend bool operator==(const DataTable&, const DataTable&) = default;

private:
    std::string name_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    Matrix values_;
};

/// Reads a CSV table: a header row whose first cell is the corner (ignored
/// for data) followed by column labels, then one row per case with its label
/// and p numeric fields. Fields may be double-quoted. When `name` is empty the
/// corner cell is used as the table name.
DataTable parse_table(std::istream& source, std::string name);
DataTable parse_table_string(std::string_view text, std::string name);

/// Inverse of parse_table. Numbers use the shortest round-trip form and the
/// corner cell carries the table name.
std::string to_csv(const DataTable& table);

enum class PreprocessMode { none, center, zscore };

std::string_view to_string(PreprocessMode mode) noexcept;
/// Throws InputError for unknown names.
PreprocessMode parse_preprocess_mode(std::string_view name);

struct PreprocessRecord {
    PreprocessMode mode = PreprocessMode::none;
    std::vector<double> means;  // filled for center and zscore
    std::vector<double> sds;    // sample sd (n-1), filled for zscore only

    friend bool operator==(const PreprocessRecord&, const PreprocessRecord&) = default;
};

/// Column means subtracted (center), then divided by the sample standard
/// deviation (zscore). A constant column under zscore is an InputError.
std::pair<Matrix, PreprocessRecord> preprocess(const DataTable& table, PreprocessMode mode);

/// Replays a stored record on raw values; reproduces preprocess() exactly.
Matrix apply_preprocess(const PreprocessRecord& record, const Matrix& raw);

std::vector<double> column_means(const Matrix& m);
/// Sample standard deviations with divisor n - 1.
std::vector<double> column_sample_sds(const Matrix& m);

} // namespace biplot
