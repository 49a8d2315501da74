#include "biplot/biplot.hpp"

#include "biplot/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace biplot {
namespace {

std::vector<std::string> default_labels(char prefix, std::size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

double squared_sum(const std::vector<double>& v, std::size_t from, std::size_t to) {
    double s = 0.0;
    for (std::size_t k = from; k < to; ++k) s += v[k] * v[k];
    return s;
}

// share of the squared weighted coordinates that falls on the first `dims` axes
std::vector<double> axis_quality(const Matrix& vectors, const std::vector<double>& sigma, std::size_t dims) {
    std::vector<double> out(vectors.rows());
    for (std::size_t i = 0; i < vectors.rows(); ++i) {
        double kept = 0.0, total = 0.0;
        for (std::size_t k = 0; k < sigma.size(); ++k) {
            const double c = sigma[k] * vectors(i, k);
            total += c * c;
            if (k < dims) kept += c * c;
        }
        out[i] = total > 0.0 ? std::clamp(kept / total, 0.0, 1.0) : 1.0;
    }
    return out;
}

} // namespace

std::string_view to_string(BiplotType type) noexcept {
    switch (type) {
    case BiplotType::jk: return "jk";
    case BiplotType::gh: return "gh";
    case BiplotType::sqrt: return "sqrt";
    case BiplotType::custom: return "custom";
    }
    return "custom";
}

BiplotType parse_biplot_type(std::string_view name) {
    if (name == "jk") return BiplotType::jk;
    if (name == "gh") return BiplotType::gh;
    if (name == "sqrt") return BiplotType::sqrt;
    throw InputError("unknown biplot type '" + std::string(name) + "' (expected jk, gh or sqrt)");
}

double gamma_of(BiplotType type) {
    switch (type) {
    case BiplotType::jk: return 1.0;
    case BiplotType::gh: return 0.0;
    case BiplotType::sqrt: return 0.5;
    case BiplotType::custom: break;
    }
    throw InputError("custom biplot type has no fixed gamma");
}

BiplotType type_of(double gamma) noexcept {
    if (gamma == 1.0) return BiplotType::jk;
    if (gamma == 0.0) return BiplotType::gh;
    if (gamma == 0.5) return BiplotType::sqrt;
    return BiplotType::custom;
}

BiplotModel fit_biplot(const Matrix& x, double gamma, std::size_t dims, Labels labels, PreprocessRecord record) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw InputError("gamma must lie in [0, 1], got " + std::to_string(gamma));
    if (labels.rows.empty()) labels.rows = default_labels('R', x.rows());
    if (labels.cols.empty()) labels.cols = default_labels('C', x.cols());
    if (labels.rows.size() != x.rows() || labels.cols.size() != x.cols())
        throw InputError("label counts (" + std::to_string(labels.rows.size()) + " x " +
                         std::to_string(labels.cols.size()) + ") do not match the matrix (" +
                         std::to_string(x.rows()) + " x " + std::to_string(x.cols()) + ")");

    BiplotModel model;
    model.svd = svd(x);
    if (dims == 0 || dims > model.svd.rank)
        throw InputError("dims " + std::to_string(dims) + " outside [1, rank = " + std::to_string(model.svd.rank) +
                         "]");
    model.gamma = gamma;
    model.dims = dims;
    model.sigma_all = model.svd.sigma;
    model.sigma_retained.assign(model.sigma_all.begin(), model.sigma_all.begin() + static_cast<std::ptrdiff_t>(dims));
    model.preprocess = std::move(record);
    model.labels = std::move(labels);

    model.row_markers = Matrix(x.rows(), dims);
    model.col_markers = Matrix(x.cols(), dims);
    for (std::size_t k = 0; k < dims; ++k) {
        const double row_weight = std::pow(model.sigma_retained[k], gamma);
        const double col_weight = std::pow(model.sigma_retained[k], 1.0 - gamma);
        for (std::size_t i = 0; i < x.rows(); ++i) model.row_markers(i, k) = model.svd.u(i, k) * row_weight;
        for (std::size_t j = 0; j < x.cols(); ++j) model.col_markers(j, k) = model.svd.v(j, k) * col_weight;
    }
    return model;
}

BiplotModel jk(const Matrix& x, std::size_t dims, Labels labels, PreprocessRecord record) {
    return fit_biplot(x, 1.0, dims, std::move(labels), std::move(record));
}

BiplotModel gh(const Matrix& x, std::size_t dims, Labels labels, PreprocessRecord record) {
    return fit_biplot(x, 0.0, dims, std::move(labels), std::move(record));
}

BiplotModel sqrt_biplot(const Matrix& x, std::size_t dims, Labels labels, PreprocessRecord record) {
    return fit_biplot(x, 0.5, dims, std::move(labels), std::move(record));
}

BiplotModel fit_table(const DataTable& table, PreprocessMode mode, double gamma, std::size_t dims) {
    auto [x, record] = preprocess(table, mode);
    return fit_biplot(x, gamma, dims, Labels{table.row_labels(), table.col_labels()}, std::move(record));
}

QualityReport quality(const BiplotModel& model, const Matrix& x) {
    if (x.rows() != model.row_markers.rows() || x.cols() != model.col_markers.rows())
        throw InputError("quality: matrix is " + std::to_string(x.rows()) + " x " + std::to_string(x.cols()) +
                         " but the model was fitted on " + std::to_string(model.row_markers.rows()) + " x " +
                         std::to_string(model.col_markers.rows()));
    const double total = squared_sum(model.sigma_all, 0, model.sigma_all.size());
    const double xnorm = frobenius_norm(x);
    if (std::abs(xnorm * xnorm - total) > 1e-8 * std::max(total, 1e-300))
        throw InputError("quality: matrix differs from the one the model was fitted on (raw vs preprocessed?)");

    QualityReport q;
    q.qr_rows = axis_quality(model.svd.u, model.sigma_all, model.dims);
    q.qr_cols = axis_quality(model.svd.v, model.sigma_all, model.dims);
    q.qr_overall = total > 0.0 ? squared_sum(model.sigma_all, 0, model.dims) / total : 1.0;
    q.residual_frobenius = frobenius_norm(x - reconstruct(model));
    return q;
}

Matrix reconstruct(const BiplotModel& model) { return model.row_markers * model.col_markers.transpose(); }

std::vector<double> variance_shares(const std::vector<double>& sigma) {
    const double total = squared_sum(sigma, 0, sigma.size());
    std::vector<double> out(sigma.size(), 0.0);
    if (total <= 0.0) return out;
    for (std::size_t k = 0; k < sigma.size(); ++k) out[k] = sigma[k] * sigma[k] / total;
    return out;
}

Matrix column_cosines(const BiplotModel& model) {
    const Matrix& b = model.col_markers;
    const auto lengths = column_lengths(model);
    const double longest = *std::max_element(lengths.begin(), lengths.end());
    const double zero_cut = longest * 1e-14;
    Matrix out(b.rows(), b.rows());
    for (std::size_t j = 0; j < b.rows(); ++j) {
        for (std::size_t l = j; l < b.rows(); ++l) {
            double c = std::numeric_limits<double>::quiet_NaN();
            if (lengths[j] > zero_cut && lengths[l] > zero_cut)
                c = j == l ? 1.0 : std::clamp(dot(b.row(j), b.row(l)) / (lengths[j] * lengths[l]), -1.0, 1.0);
            out(j, l) = out(l, j) = c;
        }
    }
    return out;
}

std::vector<double> column_lengths(const BiplotModel& model) {
    std::vector<double> out(model.col_markers.rows());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = norm(model.col_markers.row(j));
    return out;
}

Matrix pairwise_distances(const Matrix& points) {
    const std::size_t n = points.rows();
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = i + 1; l < n; ++l) {
            double s = 0.0;
            for (std::size_t k = 0; k < points.cols(); ++k) {
                const double diff = points(i, k) - points(l, k);
                s += diff * diff;
            }
            d(i, l) = d(l, i) = std::sqrt(s);
        }
    return d;
}

Matrix row_distances(const BiplotModel& model) { return pairwise_distances(model.row_markers); }

Matrix pca_scores(const Matrix& x, std::size_t dims) {
    const auto means = column_means(x);
    for (std::size_t j = 0; j < x.cols(); ++j) {
        const double scale = norm(x.column(j)) / std::sqrt(static_cast<double>(x.rows()));
        if (std::abs(means[j]) > 1e-9 * std::max(scale, 1e-300))
            throw InputError("pca_scores: column " + std::to_string(j + 1) + " is not centered");
    }
    const SvdResult s = svd(x);
    if (dims == 0 || dims > s.rank)
        throw InputError("dims " + std::to_string(dims) + " outside [1, rank = " + std::to_string(s.rank) + "]");
    return x * s.v.leading_columns(dims);
}

Matrix pearson(const Matrix& values, const std::vector<std::string>& col_labels) {
    const std::size_t n = values.rows();
    const std::size_t p = values.cols();
    if (n < 2) throw InputError("pearson: need at least two rows");
    const auto means = column_means(values);
    std::vector<std::vector<double>> centered(p, std::vector<double>(n));
    std::vector<double> norms(p);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < n; ++i) centered[j][i] = values(i, j) - means[j];
        norms[j] = norm(centered[j]);
        if (!(norms[j] > std::max(std::abs(means[j]), 1.0) * 1e-14 * std::sqrt(static_cast<double>(n)))) {
            const std::string name = j < col_labels.size() ? "'" + col_labels[j] + "'" : std::to_string(j + 1);
            throw InputError("pearson: column " + name + " is constant");
        }
    }
    Matrix r(p, p);
    for (std::size_t j = 0; j < p; ++j) {
        r(j, j) = 1.0;
        for (std::size_t l = j + 1; l < p; ++l)
            r(j, l) = r(l, j) = std::clamp(dot(centered[j], centered[l]) / (norms[j] * norms[l]), -1.0, 1.0);
    }
    return r;
}

Matrix pearson(const DataTable& table) { return pearson(table.values(), table.col_labels()); }

double projected_value(const BiplotModel& model, std::size_t i, std::size_t j) {
    const auto a = model.row_markers.row(i);
    const auto b = model.col_markers.row(j);
    const double len = norm(b);
    if (len == 0.0) return 0.0;
    // signed length of the perpendicular projection of a_i on the b_j axis
    const double projection = dot(a, b) / len;
    return projection * len;
}

} // namespace biplot
