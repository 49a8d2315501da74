#include "biplot/data_table.hpp"

#include "biplot/error.hpp"
#include "biplot/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>

namespace biplot {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"' && trim(cell).empty()) {
            cell.clear();
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            cells.push_back(was_quoted ? cell : std::string(trim(cell)));
            cell.clear();
            was_quoted = false;
        } else if (!was_quoted) {
            cell += c;
        } else if (!trim(std::string_view(&c, 1)).empty()) {
            throw InputError("line " + std::to_string(line_no) + ": text after closing quote");
        }
    }
    if (quoted) throw InputError("line " + std::to_string(line_no) + ": unterminated quoted field");
    cells.push_back(was_quoted ? cell : std::string(trim(cell)));
    return cells;
}

void check_unique(const std::vector<std::string>& labels, const char* axis) {
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw InputError(std::string("empty ") + axis + " label");
        if (!seen.insert(l).second) throw InputError(std::string("duplicate ") + axis + " label '" + l + "'");
    }
}

bool needs_quotes(std::string_view s) {
    return s.find_first_of(",\"\r\n") != std::string_view::npos || (!s.empty() && (s.front() == ' ' || s.back() == ' '));
}

void write_cell(std::ostream& out, std::string_view s) {
    if (!needs_quotes(s)) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

} // namespace

DataTable::DataTable(std::string name, std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                     Matrix values)
    : name_(std::move(name)), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)),
      values_(std::move(values)) {
    if (values_.rows() != row_labels_.size() || values_.cols() != col_labels_.size())
        throw InputError("table '" + name_ + "': label counts do not match the value matrix");
    if (rows() < 3) throw InputError("table '" + name_ + "': need at least 3 rows, got " + std::to_string(rows()));
    if (cols() < 2)
        throw InputError("table '" + name_ + "': need at least 2 columns, got " + std::to_string(cols()));
    check_unique(row_labels_, "row");
    check_unique(col_labels_, "column");
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            if (!std::isfinite(values_(i, j)))
                throw InputError("table '" + name_ + "': non-finite value at row '" + row_labels_[i] +
                                 "', column '" + col_labels_[j] + "'");
}

std::size_t DataTable::row_index(std::string_view label) const {
    const auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
    if (it == row_labels_.end()) throw InputError("unknown row label '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - row_labels_.begin());
}

std::size_t DataTable::col_index(std::string_view label) const {
    const auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
    if (it == col_labels_.end()) throw InputError("unknown column label '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - col_labels_.begin());
}

DataTable parse_table(std::istream& source, std::string name) {
    std::vector<std::string> header;
    std::vector<std::string> row_labels;
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(source, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
        if (trim(view).empty()) continue;
        auto cells = split_csv_line(view, line_no);

        if (header.empty()) {
            header = std::move(cells);
            if (header.size() < 2) throw InputError("line " + std::to_string(line_no) + ": header has no column labels");
            continue;
        }

        const std::size_t p = header.size() - 1;
        const std::string& label = cells.front();
        if (cells.size() != p + 1)
            throw InputError("line " + std::to_string(line_no) + ", row '" + label + "': expected " +
                             std::to_string(p + 1) + " fields, found " + std::to_string(cells.size()));
        std::vector<double> values(p);
        for (std::size_t j = 0; j < p; ++j) {
            const std::string_view cell = trim(cells[j + 1]);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v))
                throw InputError("line " + std::to_string(line_no) + ", row '" + label + "', column '" +
                                 header[j + 1] + "': not a finite number: '" + std::string(cell) + "'");
            values[j] = v;
        }
        if (std::find(row_labels.begin(), row_labels.end(), label) != row_labels.end())
            throw InputError("line " + std::to_string(line_no) + ": duplicate row label '" + label + "'");
        row_labels.push_back(label);
        rows.push_back(std::move(values));
    }
    if (header.empty()) throw InputError("empty CSV input");

    if (name.empty()) name = header.front();
    std::vector<std::string> col_labels(header.begin() + 1, header.end());
    if (rows.empty()) throw InputError("table '" + name + "': no data rows");
    return DataTable(std::move(name), std::move(row_labels), std::move(col_labels), Matrix::from_rows(rows));
}

DataTable parse_table_string(std::string_view text, std::string name) {
    std::istringstream in{std::string(text)};
    return parse_table(in, std::move(name));
}

std::string to_csv(const DataTable& table) {
    std::ostringstream out;
    write_cell(out, table.name());
    for (const auto& c : table.col_labels()) {
        out << ',';
        write_cell(out, c);
    }
    out << '\n';
    for (std::size_t i = 0; i < table.rows(); ++i) {
        write_cell(out, table.row_labels()[i]);
        for (double v : table.values().row(i)) out << ',' << shortest(v);
        out << '\n';
    }
    return out.str();
}

std::string_view to_string(PreprocessMode mode) noexcept {
    switch (mode) {
    case PreprocessMode::none: return "none";
    case PreprocessMode::center: return "center";
    case PreprocessMode::zscore: return "zscore";
    }
    return "none";
}

PreprocessMode parse_preprocess_mode(std::string_view name) {
    if (name == "none") return PreprocessMode::none;
    if (name == "center") return PreprocessMode::center;
    if (name == "zscore") return PreprocessMode::zscore;
    throw InputError("unknown preprocessing mode '" + std::string(name) + "' (expected none, center or zscore)");
}

std::vector<double> column_means(const Matrix& m) {
    std::vector<double> means(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) means[j] += m(i, j);
    for (auto& v : means) v /= static_cast<double>(m.rows());
    return means;
}

std::vector<double> column_sample_sds(const Matrix& m) {
    const auto means = column_means(m);
    std::vector<double> sds(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double d = m(i, j) - means[j];
            sds[j] += d * d;
        }
    for (auto& v : sds) v = std::sqrt(v / static_cast<double>(m.rows() - 1));
    return sds;
}

std::pair<Matrix, PreprocessRecord> preprocess(const DataTable& table, PreprocessMode mode) {
    PreprocessRecord record;
    record.mode = mode;
    if (mode != PreprocessMode::none) record.means = column_means(table.values());
    if (mode == PreprocessMode::zscore) {
        record.sds = column_sample_sds(table.values());
        for (std::size_t j = 0; j < record.sds.size(); ++j) {
            // a column whose spread is at rounding level of its magnitude is constant
            const double scale = std::max(std::abs(record.means[j]), 1.0);
            if (!(record.sds[j] > scale * 1e-14))
                throw InputError("zscore: column '" + table.col_labels()[j] + "' is constant");
        }
    }
    Matrix out = apply_preprocess(record, table.values());
    return {std::move(out), std::move(record)};
}

Matrix apply_preprocess(const PreprocessRecord& record, const Matrix& raw) {
    Matrix out = raw;
    if (record.mode == PreprocessMode::none) return out;
    if (record.means.size() != raw.cols() ||
        (record.mode == PreprocessMode::zscore && record.sds.size() != raw.cols()))
        throw InputError("apply_preprocess: record does not match the column count");
    for (std::size_t i = 0; i < raw.rows(); ++i)
        for (std::size_t j = 0; j < raw.cols(); ++j) {
            double v = raw(i, j) - record.means[j];
            if (record.mode == PreprocessMode::zscore) v /= record.sds[j];
            out(i, j) = v;
        }
    return out;
}

} // namespace biplot
