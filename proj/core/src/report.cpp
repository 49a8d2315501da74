#include "biplot/report.hpp"

#include "biplot/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace biplot {
namespace {

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j) {
    if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
    return j.get<double>();
}

json vector_to_json(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) out.push_back(number(x));
    return out;
}

std::vector<double> vector_from_json(const json& j) {
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(number_from(x));
    return out;
}

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols)
        throw InputError(std::string("build_report: ") + what + " is " + std::to_string(m.rows()) + " x " +
                         std::to_string(m.cols()) + ", expected " + std::to_string(rows) + " x " +
                         std::to_string(cols));
}

} // namespace

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (double v : m.row(i)) row.push_back(number(v));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const json& j) {
    std::vector<std::vector<double>> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    return Matrix::from_rows(rows);
}

AnalysisReport build_report(std::string dataset_name, const BiplotModel& model, const QualityReport& quality,
                            const Matrix& correlations, const Matrix& cosines, std::vector<std::string> warnings) {
    const std::size_t n = model.row_markers.rows();
    const std::size_t p = model.col_markers.rows();
    if (model.labels.rows.size() != n || model.labels.cols.size() != p)
        throw InputError("build_report: label counts do not match the model markers");
    if (quality.qr_rows.size() != n || quality.qr_cols.size() != p)
        throw InputError("build_report: quality report belongs to a differently shaped model");
    expect_shape(correlations, p, p, "correlation matrix");
    expect_shape(cosines, p, p, "cosine matrix");

    AnalysisReport r;
    r.dataset = {std::move(dataset_name), n, p, model.labels.rows, model.labels.cols};
    r.preprocess = model.preprocess;
    r.method = {std::string(to_string(model.type())), model.gamma, model.dims};
    r.singular_values = model.sigma_all;
    r.row_markers = model.row_markers;
    r.col_markers = model.col_markers;
    r.quality = quality;
    r.correlations = correlations;
    r.cosines = cosines;
    r.warnings = std::move(warnings);

    for (std::size_t j = 0; j < p; ++j)
        if (std::isnan(cosines(j, j)))
            r.warnings.push_back("column '" + model.labels.cols[j] + "' has a zero-length marker; its cosines are undefined");
    for (std::size_t i = 0; i < n; ++i)
        if (quality.qr_rows[i] < 0.5)
            r.warnings.push_back("row '" + model.labels.rows[i] + "' is poorly represented (QR " +
                                 std::to_string(quality.qr_rows[i]) + ")");
    for (std::size_t j = 0; j < p; ++j)
        if (quality.qr_cols[j] < 0.5)
            r.warnings.push_back("column '" + model.labels.cols[j] + "' is poorly represented (QR " +
                                 std::to_string(quality.qr_cols[j]) + ")");
    return r;
}

AnalysisReport analyze(const DataTable& table, PreprocessMode mode, double gamma, std::size_t dims) {
    const auto [x, record] = preprocess(table, mode);
    const BiplotModel model = fit_biplot(x, gamma, dims, Labels{table.row_labels(), table.col_labels()}, record);
    return build_report(table.name(), model, quality(model, x), pearson(table), column_cosines(model));
}

json to_json(const AnalysisReport& r) {
    json doc;
    doc["dataset"] = {{"name", r.dataset.name},
                      {"rows", r.dataset.rows},
                      {"cols", r.dataset.cols},
                      {"row_labels", r.dataset.row_labels},
                      {"col_labels", r.dataset.col_labels}};
    doc["preprocess"] = {{"mode", std::string(to_string(r.preprocess.mode))},
                         {"means", vector_to_json(r.preprocess.means)},
                         {"sds", vector_to_json(r.preprocess.sds)}};
    doc["method"] = {{"type", r.method.type}, {"gamma", r.method.gamma}, {"dims", r.method.dims}};
    doc["singular_values"] = vector_to_json(r.singular_values);
    doc["row_markers"] = matrix_to_json(r.row_markers);
    doc["col_markers"] = matrix_to_json(r.col_markers);
    doc["quality"] = {{"qr_rows", vector_to_json(r.quality.qr_rows)},
                      {"qr_cols", vector_to_json(r.quality.qr_cols)},
                      {"qr_overall", number(r.quality.qr_overall)},
                      {"residual_frobenius", number(r.quality.residual_frobenius)}};
    doc["correlations"] = matrix_to_json(r.correlations);
    doc["cosines"] = matrix_to_json(r.cosines);
    doc["warnings"] = r.warnings;
    return doc;
}

AnalysisReport report_from_json(const json& doc) {
    try {
        AnalysisReport r;
        const auto& ds = doc.at("dataset");
        r.dataset.name = ds.at("name").get<std::string>();
        r.dataset.rows = ds.at("rows").get<std::size_t>();
        r.dataset.cols = ds.at("cols").get<std::size_t>();
        r.dataset.row_labels = ds.at("row_labels").get<std::vector<std::string>>();
        r.dataset.col_labels = ds.at("col_labels").get<std::vector<std::string>>();
        const auto& pp = doc.at("preprocess");
        r.preprocess.mode = parse_preprocess_mode(pp.at("mode").get<std::string>());
        r.preprocess.means = vector_from_json(pp.at("means"));
        r.preprocess.sds = vector_from_json(pp.at("sds"));
        const auto& m = doc.at("method");
        r.method.type = m.at("type").get<std::string>();
        r.method.gamma = m.at("gamma").get<double>();
        r.method.dims = m.at("dims").get<std::size_t>();
        r.singular_values = vector_from_json(doc.at("singular_values"));
        r.row_markers = matrix_from_json(doc.at("row_markers"));
        r.col_markers = matrix_from_json(doc.at("col_markers"));
        const auto& q = doc.at("quality");
        r.quality.qr_rows = vector_from_json(q.at("qr_rows"));
        r.quality.qr_cols = vector_from_json(q.at("qr_cols"));
        r.quality.qr_overall = number_from(q.at("qr_overall"));
        r.quality.residual_frobenius = number_from(q.at("residual_frobenius"));
        r.correlations = matrix_from_json(doc.at("correlations"));
        r.cosines = matrix_from_json(doc.at("cosines"));
        r.warnings = doc.at("warnings").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
}

std::string serialize(const AnalysisReport& report) { return to_json(report).dump(2) + "\n"; }

AnalysisReport parse_report(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("report is not valid JSON: ") + e.what());
    }
    return report_from_json(doc);
}

} // namespace biplot
