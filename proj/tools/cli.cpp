#include "cli.hpp"

#include <biplot/baselines.hpp>
#include <biplot/biplot.hpp>
#include <biplot/cases.hpp>
#include <biplot/data_table.hpp>
#include <biplot/error.hpp>
#include <biplot/format.hpp>
#include <biplot/report.hpp>
#include <biplot/svg.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace biplot::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path.string() + "' for writing");
    f << content;
    if (!f) throw InputError("failed writing '" + path.string() + "'");
}

DataTable read_table(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path.string() + "'");
    DataTable t = parse_table(f, "");
    if (t.name().empty()) return DataTable(path.stem().string(), t.row_labels(), t.col_labels(), t.values());
    return t;
}

struct AnalysisOptions {
    PreprocessMode mode = PreprocessMode::zscore;
    double gamma = 1.0;
    std::size_t dims = 2;
    std::optional<double> vector_scale;
    std::string json_path;
    std::string svg_path;
};

void run_analysis(const DataTable& table, const AnalysisOptions& opt, std::ostream& out) {
    const auto [x, record] = preprocess(table, opt.mode);
    const BiplotModel model =
        fit_biplot(x, opt.gamma, opt.dims, Labels{table.row_labels(), table.col_labels()}, record);
    const QualityReport q = quality(model, x);
    const AnalysisReport report = build_report(table.name(), model, q, pearson(table), column_cosines(model));

    if (!opt.json_path.empty()) write_file(opt.json_path, serialize(report));
    if (!opt.svg_path.empty()) {
        PlotSpec spec;
        spec.vector_scale = opt.vector_scale;
        write_file(opt.svg_path, render_svg(model, q, spec));
    }
    out << table.name() << ": " << table.rows() << " x " << table.cols() << ", " << report.method.type
        << " biplot (gamma " << shortest(opt.gamma) << "), " << to_string(opt.mode) << ", dims " << opt.dims
        << "\nqr_overall " << fixed(q.qr_overall, 4) << '\n';
}

json dataset_json(const DataTable& t) {
    return {{"name", t.name()}, {"rows", t.rows()}, {"cols", t.cols()}, {"row_labels", t.row_labels()},
            {"col_labels", t.col_labels()}};
}

std::vector<std::string> split_methods(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "jk" || item == "pca" || item == "mds" || item == "ca") {
            if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
        } else {
            throw InputError("unknown method '" + item + "' (expected jk, pca, mds or ca)");
        }
    }
    if (out.empty()) throw InputError("no methods requested");
    return out;
}

void run_compare(const DataTable& table, const std::vector<std::string>& methods, const fs::path& dir,
                 std::ostream& out) {
    constexpr std::size_t dims = 2;
    const auto [z, record] = preprocess(table, PreprocessMode::zscore);
    const Labels labels{table.row_labels(), table.col_labels()};

    // compute everything first; files are written only once every method succeeded
    std::vector<std::pair<std::string, std::string>> files;
    json summary;
    summary["dataset"] = dataset_json(table);
    summary["methods"] = json::object();

    for (const auto& method : methods) {
        double share = 0.0;
        if (method == "jk") {
            const BiplotModel model = fit_biplot(z, 1.0, dims, labels, record);
            const QualityReport q = quality(model, z);
            files.emplace_back("jk.json",
                               serialize(build_report(table.name(), model, q, pearson(table), column_cosines(model))));
            files.emplace_back("jk.svg", render_svg(model, q));
            share = q.qr_overall;
        } else if (method == "pca") {
            const Matrix scores = pca_map(table, dims);
            const auto shares = variance_shares(svd(z).sigma);
            share = shares[0] + shares[1];
            json doc{{"method", "pca"}, {"dataset", dataset_json(table)}, {"scores", matrix_to_json(scores)},
                     {"variance_shares", shares}, {"share_2d", share}};
            files.emplace_back("pca.json", doc.dump(2) + "\n");
            MapPlot plot{"PCA scores", "PC1 (" + fixed(100 * shares[0], 1) + "%)",
                         "PC2 (" + fixed(100 * shares[1], 1) + "%)", scores, table.row_labels(), {}, {}, {}, {},
                         {"z-scored columns"}};
            files.emplace_back("pca.svg", render_map(plot));
        } else if (method == "mds") {
            const MdsEmbedding mds = classical_mds(pairwise_distances(z), dims);
            share = 1.0 - mds.strain;
            json doc{{"method", "mds"},          {"dataset", dataset_json(table)},
                     {"coords", matrix_to_json(mds.coords)}, {"eigenvalues", mds.eigenvalues},
                     {"strain", mds.strain},     {"truncated", mds.truncated},
                     {"share_2d", share}};
            files.emplace_back("mds.json", doc.dump(2) + "\n");
            Matrix coords = mds.coords;
            if (coords.cols() < 2) {
                Matrix padded(coords.rows(), 2);
                for (std::size_t i = 0; i < coords.rows(); ++i)
                    for (std::size_t k = 0; k < coords.cols(); ++k) padded(i, k) = coords(i, k);
                coords = padded;
            }
            MapPlot plot{"Classical MDS", "Dimension 1", "Dimension 2", coords, table.row_labels(), {}, {}, {}, {},
                         {"Euclidean distances of z-scored rows", "strain " + fixed(mds.strain, 4)}};
            files.emplace_back("mds.svg", render_map(plot));
        } else if (method == "ca") {
            const CaModel ca = correspondence_analysis(table, dims);
            share = ca.total_inertia > 0.0 ? (ca.inertias[0] + ca.inertias[1]) / ca.total_inertia : 1.0;
            json doc{{"method", "ca"},
                     {"dataset", dataset_json(table)},
                     {"row_coords", matrix_to_json(ca.row_coords)},
                     {"col_coords", matrix_to_json(ca.col_coords)},
                     {"inertias", ca.inertias},
                     {"total_inertia", ca.total_inertia},
                     {"row_masses", ca.row_masses},
                     {"col_masses", ca.col_masses},
                     {"warnings", ca.warnings},
                     {"share_2d", share}};
            files.emplace_back("ca.json", doc.dump(2) + "\n");
            std::vector<std::string> legend{"symmetric map: rows (dots) and columns (squares) in principal coordinates"};
            legend.insert(legend.end(), ca.warnings.begin(), ca.warnings.end());
            MapPlot plot{"Correspondence analysis",
                         "Axis 1 (" + fixed(100 * ca.inertias[0] / ca.total_inertia, 1) + "% inertia)",
                         "Axis 2 (" + fixed(100 * ca.inertias[1] / ca.total_inertia, 1) + "% inertia)",
                         ca.row_coords, table.row_labels(), {}, {}, ca.col_coords, table.col_labels(), legend};
            files.emplace_back("ca.svg", render_map(plot));
            for (const auto& w : ca.warnings) out << "warning (ca): " << w << '\n';
        }
        summary["methods"][method] = {{"share_2d", share}, {"json", method + ".json"}, {"svg", method + ".svg"}};
        out << method << ": 2-D share " << fixed(share, 4) << '\n';
    }
    files.emplace_back("summary.json", summary.dump(2) + "\n");

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create output directory '" + dir.string() + "': " + ec.message());
    for (const auto& [name, content] : files) write_file(dir / name, content);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Biplot analysis of labeled indicator tables", "biplot"};
    app.require_subcommand(1);

    AnalysisOptions analyze_opt;
    std::string input;
    std::string type_name;
    std::optional<double> gamma;
    std::string scale_name = "zscore";
    auto* analyze_cmd = app.add_subcommand("analyze", "Fit a biplot to a CSV table");
    analyze_cmd->add_option("input", input, "CSV table")->required();
    auto* type_opt =
        analyze_cmd->add_option("--type", type_name, "Named factorization")->check(CLI::IsMember({"jk", "gh", "sqrt"}));
    auto* gamma_opt = analyze_cmd->add_option("--gamma", gamma, "Row marker exponent")->check(CLI::Range(0.0, 1.0));
    type_opt->excludes(gamma_opt);
    analyze_cmd->add_option("--dims", analyze_opt.dims, "Retained axes")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--scale", scale_name, "Column preprocessing")
        ->check(CLI::IsMember({"none", "center", "zscore"}));
    analyze_cmd->add_option("--json", analyze_opt.json_path, "Write the report here");
    analyze_cmd->add_option("--svg", analyze_opt.svg_path, "Write the plot here");
    analyze_cmd->add_option("--vector-scale", analyze_opt.vector_scale, "Display multiplier for column arrows");

    std::string compare_input;
    std::string methods = "jk,pca,mds,ca";
    std::string out_dir = ".";
    auto* compare_cmd = app.add_subcommand("compare", "Biplot next to PCA, classical MDS and correspondence analysis");
    compare_cmd->add_option("input", compare_input, "CSV table")->required();
    compare_cmd->add_option("--methods", methods, "Comma-separated subset of jk,pca,mds,ca");
    compare_cmd->add_option("--out", out_dir, "Output directory");

    int case_id = 0;
    std::string dump_path;
    AnalysisOptions case_opt;
    auto* case_cmd = app.add_subcommand("case", "Analyze or export an embedded case table");
    case_cmd->add_option("id", case_id, "1, 2 or 3")->required();
    case_cmd->add_option("--dump-csv", dump_path, "Write the table as CSV");
    case_cmd->add_option("--json", case_opt.json_path, "Write the report here");
    case_cmd->add_option("--svg", case_opt.svg_path, "Write the plot here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*analyze_cmd) {
            analyze_opt.mode = parse_preprocess_mode(scale_name);
            if (gamma) analyze_opt.gamma = *gamma;
            else if (!type_name.empty()) analyze_opt.gamma = gamma_of(parse_biplot_type(type_name));
            run_analysis(read_table(input), analyze_opt, out);
        } else if (*compare_cmd) {
            run_compare(read_table(compare_input), split_methods(methods), out_dir, out);
        } else if (*case_cmd) {
            const DataTable table = load_case(case_id);
            if (!dump_path.empty()) write_file(dump_path, to_csv(table));
            run_analysis(table, case_opt, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalError;
    }
    return kOk;
}

} // namespace biplot::cli
