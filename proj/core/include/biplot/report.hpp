#pragma once

#include "biplot/biplot.hpp"
#include "biplot/data_table.hpp"
#include "biplot/matrix.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace biplot {

/// Everything one biplot analysis produces, in a serializable bundle.
struct AnalysisReport {
    struct Dataset {
        std::string name;
        std::size_t rows = 0;
        std::size_t cols = 0;
        std::vector<std::string> row_labels;
        std::vector<std::string> col_labels;
    };
    struct Method {
        std::string type;  // jk, gh, sqrt or custom
        double gamma = 1.0;
        std::size_t dims = 2;
    };

    Dataset dataset;
    PreprocessRecord preprocess;
    Method method;
    std::vector<double> singular_values;
    Matrix row_markers;
    Matrix col_markers;
    QualityReport quality;
    Matrix correlations;  // Pearson, p x p
    Matrix cosines;       // column marker cosines, NaN where undefined
    std::vector<std::string> warnings;
};

/// Assembles a report from pieces of one analysis. Shapes that cannot come
/// from the same model throw InputError. Undefined cosines and poorly
/// represented rows or columns (QR below 0.5) append warnings.
AnalysisReport build_report(std::string dataset_name, const BiplotModel& model, const QualityReport& quality,
                            const Matrix& correlations, const Matrix& cosines,
                            std::vector<std::string> warnings = {});

/// Preprocess, fit, score and bundle a table in one call.
AnalysisReport analyze(const DataTable& table, PreprocessMode mode, double gamma, std::size_t dims);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& doc);

/// Key-sorted, indented JSON text ending in a newline. NaN is written as null.
std::string serialize(const AnalysisReport& report);
AnalysisReport parse_report(std::string_view text);

/// Matrix <-> nested arrays; NaN maps to null.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

} // namespace biplot
