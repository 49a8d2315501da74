// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include "cli.hpp"
#include "test_support.hpp"

#include <biplot/baselines.hpp>
#include <biplot/biplot.hpp>
#include <biplot/cases.hpp>
#include <biplot/format.hpp>
#include <biplot/linalg.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace biplot;
using biplot::testing::centered;
using biplot::testing::random_matrix;

namespace {

namespace fs = std::filesystem;

class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
        notes_.push_back((ok ? "ok: " : "FAILED: ") + what);
    }
    void near(double value, double target, double tol, const std::string& what) {
        expect(std::abs(value - target) <= tol,
               what + " = " + fixed(value, 4) + " (target " + shortest(target) + " +/- " + shortest(tol) + ")");
    }
    void at_most(double value, double bound, const std::string& what) {
        expect(value <= bound, what + " = " + shortest(value) + " (bound " + shortest(bound) + ")");
    }
    bool passed() const { return failures_.empty(); }
    const std::vector<std::string>& notes() const { return notes_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> notes_;
    std::vector<std::string> failures_;
};

struct CaseFit {
    DataTable table;
    Matrix x;
    BiplotModel model;
    QualityReport quality;
    Matrix correlations;
};

CaseFit fit_case(int id) {
    DataTable t = load_case(id);
    auto [x, rec] = preprocess(t, PreprocessMode::zscore);
    BiplotModel m = fit_biplot(x, 1.0, 2, Labels{t.row_labels(), t.col_labels()}, rec);
    QualityReport q = biplot::quality(m, x);
    Matrix r = pearson(t);
    return {std::move(t), std::move(x), std::move(m), std::move(q), std::move(r)};
}

double corr(const CaseFit& c, const char* a, const char* b) {
    return c.correlations(c.table.col_index(a), c.table.col_index(b));
}

double qr_col(const CaseFit& c, const char* label) { return c.quality.qr_cols[c.table.col_index(label)]; }

// --- quantitative criteria -------------------------------------------------

void case1_fit(Check& c) { c.near(fit_case(1).quality.qr_overall, 0.899, 0.03, "case 1 qr_overall"); }

void case1_columns(Check& c) {
    const CaseFit f = fit_case(1);
    c.near(qr_col(f, "GDP"), 0.75, 0.05, "case 1 qr_col[GDP]");
    for (const auto& label : f.table.col_labels())
        if (label != "GDP") c.expect(qr_col(f, label.c_str()) > 0.90, "case 1 qr_col[" + label + "] = " +
                                                                         fixed(qr_col(f, label.c_str()), 3) + " > 0.90");
}

void case1_rows(Check& c) {
    const CaseFit f = fit_case(1);
    int above = 0;
    double lowest = 1.0;
    std::string lowest_label;
    for (std::size_t i = 0; i < f.quality.qr_rows.size(); ++i) {
        if (f.quality.qr_rows[i] > 0.88) ++above;
        if (f.quality.qr_rows[i] < lowest) {
            lowest = f.quality.qr_rows[i];
            lowest_label = f.table.row_labels()[i];
        }
    }
    c.expect(above >= 14, "case 1 rows with qr_row > 0.88: " + std::to_string(above) + " (need >= 14 of 21)");
    c.expect(lowest >= 0.70, "case 1 lowest qr_row = " + fixed(lowest, 3) + " (" + lowest_label + "), need >= 0.70");
}

void case1_correlations(Check& c) {
    const CaseFit f = fit_case(1);
    c.near(corr(f, "%HR", "DOC"), 0.198, 0.02, "case 1 corr(%HR, DOC)");
    c.near(corr(f, "CAVG", "NCIT"), 0.928, 0.01, "case 1 corr(CAVG, NCIT)");
}

void case2(Check& c) {
    const CaseFit f = fit_case(2);
    c.near(f.quality.qr_overall, 0.879, 0.03, "case 2 qr_overall");
    c.near(corr(f, "Teaching", "Research"), 0.784, 0.01, "case 2 corr(Teaching, Research)");
    for (const auto& label : f.table.col_labels())
        c.expect(qr_col(f, label.c_str()) > 0.75,
                 "case 2 qr_col[" + label + "] = " + fixed(qr_col(f, label.c_str()), 3) + " > 0.75");
}

void case3(Check& c) {
    const CaseFit f = fit_case(3);
    c.near(f.quality.qr_overall, 0.722, 0.03, "case 3 qr_overall");
    c.near(corr(f, "NCIT", "H-Index"), 0.822, 0.03, "case 3 corr(NCIT, H-Index)");
    c.near(corr(f, "H-Index", "TOPCIT"), -0.042, 0.03, "case 3 corr(H-Index, TOPCIT)");
    c.expect(qr_col(f, "%Q1") < 0.10, "case 3 qr_col[%Q1] = " + fixed(qr_col(f, "%Q1"), 3) + " < 0.10");
    c.near(f.quality.qr_rows[f.table.row_index("Economics & Business")], 0.47, 0.06,
           "case 3 qr_row[Economics & Business]");
}

void cluster_order(Check& c) {
    const CaseFit f1 = fit_case(1);
    const Matrix d1 = row_distances(f1.model);
    const std::vector<std::string> nordic{"Denmark", "Sweden", "Finland", "Norway"};
    const std::size_t bg = f1.table.row_index("Bulgaria");
    double within = 0.0, to_bulgaria = INFINITY;
    for (const auto& a : nordic) {
        to_bulgaria = std::min(to_bulgaria, d1(f1.table.row_index(a), bg));
        for (const auto& b : nordic) within = std::max(within, d1(f1.table.row_index(a), f1.table.row_index(b)));
    }
    c.expect(within < to_bulgaria, "case 1 largest Nordic distance " + fixed(within, 3) +
                                       " < smallest Nordic-Bulgaria distance " + fixed(to_bulgaria, 3));

    const CaseFit f3 = fit_case(3);
    const Matrix d3 = row_distances(f3.model);
    std::vector<double> nearest(d3.rows(), INFINITY);
    for (std::size_t i = 0; i < d3.rows(); ++i)
        for (std::size_t j = 0; j < d3.rows(); ++j)
            if (i != j) nearest[i] = std::min(nearest[i], d3(i, j));
    const std::size_t it = f3.table.row_index("Inf. Technology");
    bool isolated = true;
    for (std::size_t i = 0; i < nearest.size(); ++i)
        if (i != it && nearest[i] >= nearest[it]) isolated = false;
    c.expect(isolated, "case 3 Inf. Technology nearest-neighbour distance " + fixed(nearest[it], 3) +
                           " is the largest of all fields");
}

// --- property criteria -----------------------------------------------------

void svd_suite(Check& c) {
    std::mt19937_64 rng(8080);
    std::uniform_int_distribution<std::size_t> rows(1, 12), cols(1, 8);
    double worst_rec = 0, worst_orth = 0;
    bool eckart_young = true, deterministic = true;
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix m = random_matrix(rows(rng), cols(rng), rng, -3.0, 3.0);
        const SvdResult s = svd(m);
        worst_rec = std::max(worst_rec, frobenius_norm(m - low_rank_approx(s, s.size())) / frobenius_norm(m));
        worst_orth = std::max({worst_orth, max_abs_diff(s.u.transpose() * s.u, Matrix::identity(s.size())),
                               max_abs_diff(s.v.transpose() * s.v, Matrix::identity(s.size()))});
        const SvdResult again = svd(m);
        deterministic = deterministic && again.u == s.u && again.v == s.v && again.sigma == s.sigma;
        if (s.size() >= 2) {
            const double best = frobenius_norm(m - low_rank_approx(s, 2));
            for (int k = 0; k < 50; ++k) {
                const Matrix competitor = random_matrix(m.rows(), 2, rng) * random_matrix(2, m.cols(), rng);
                if (frobenius_norm(m - competitor) < best) eckart_young = false;
            }
        }
    }
    c.at_most(worst_rec, 1e-10, "worst relative reconstruction error");
    c.at_most(worst_orth, 1e-10, "worst orthonormality error");
    c.expect(eckart_young, "rank-2 truncation beats 50 random rank-2 competitors on every matrix");
    c.expect(deterministic, "repeated decompositions are bitwise identical");
}

void biplot_identities(Check& c) {
    std::mt19937_64 rng(9090);
    double gamma_gap = 0, pca_gap = 0, gh_gap = 0, weighted_gap = 0, projection_gap = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix x = centered(random_matrix(10, 5, rng, -2.0, 2.0));
        const std::size_t dims = 1 + trial % 4;
        const Matrix base = reconstruct(fit_biplot(x, 1.0, dims));
        for (double g : {0.0, 0.3, 0.5, 0.9})
            gamma_gap = std::max(gamma_gap, max_abs_diff(reconstruct(fit_biplot(x, g, dims)), base));
        pca_gap = std::max(pca_gap, max_abs_diff(pca_scores(x, dims), jk(x, dims).row_markers));

        const BiplotModel full = gh(x, svd(x).rank);
        const Matrix xtx = x.transpose() * x;
        gh_gap = std::max(gh_gap, frobenius_norm(full.col_markers * full.col_markers.transpose() - xtx) /
                                      frobenius_norm(xtx));

        const BiplotModel m = fit_biplot(x, 0.5, dims);
        const QualityReport q = quality(m, x);
        const double total = frobenius_norm(x) * frobenius_norm(x);
        double weighted = 0;
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const auto col = x.column(j);
            weighted += dot(col, col) * q.qr_cols[j];
        }
        weighted_gap = std::max(weighted_gap, std::abs(weighted / total - q.qr_overall));

        const Matrix r = reconstruct(m);
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                projection_gap = std::max(projection_gap, std::abs(projected_value(m, i, j) - r(i, j)));
    }
    c.at_most(gamma_gap, 1e-10, "gamma invariance of A B'");
    c.at_most(pca_gap, 1e-10, "JK row markers vs PCA scores");
    c.at_most(gh_gap, 1e-9, "GH full-rank B B' vs X'X (relative)");
    c.at_most(weighted_gap, 1e-9, "QR weighted-mean identity");
    c.at_most(projection_gap, 1e-10, "projection rule vs reconstruction");
}

void baseline_oracles(Check& c) {
    std::mt19937_64 rng(7070);
    double procrustes = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix config = centered(random_matrix(6, 3, rng, -2.0, 2.0));
        const Matrix coords = classical_mds(pairwise_distances(config), 3).coords;
        const auto a = biplot::testing::to_eigen(config), b = biplot::testing::to_eigen(coords);
        Eigen::JacobiSVD<Eigen::MatrixXd> s(b.transpose() * a, Eigen::ComputeFullU | Eigen::ComputeFullV);
        procrustes = std::max(procrustes, (b * s.matrixU() * s.matrixV().transpose() - a).norm());
    }
    c.at_most(procrustes, 1e-8, "MDS Procrustes residual");

    double inertia_gap = 0, transition_gap = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix t = random_matrix(6, 4, rng, 0.5, 40.0);
        double total = 0;
        for (double v : t.data()) total += v;
        const CaModel ca = correspondence_analysis(t, 2);
        inertia_gap = std::max(inertia_gap, std::abs(ca.total_inertia - chi_square(t) / total));
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t i = 0; i < t.rows(); ++i) {
                double bary = 0;
                for (std::size_t j = 0; j < t.cols(); ++j)
                    bary += t(i, j) / total / ca.row_masses[i] * ca.col_coords(j, k);
                transition_gap =
                    std::max(transition_gap, std::abs(ca.row_coords(i, k) - bary / std::sqrt(ca.inertias[k])));
            }
    }
    c.at_most(inertia_gap, 1e-9, "CA total inertia vs chi-square / total");
    c.at_most(transition_gap, 1e-9, "CA transition formula");

    Matrix independent(5, 3);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 3; ++j) independent(i, j) = (i + 1.0) * (2.0 * j + 1.0);
    c.at_most(correspondence_analysis(independent, 1).total_inertia, 1e-12, "independence table inertia");
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void interface_determinism(Check& c) {
    const fs::path dir = fs::temp_directory_path() / "biplot_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto p = [&](const char* name) { return (dir / name).string(); };
    const auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        return cli::run(args, out, err);
    };

    bool ok = run({"case", "1", "--dump-csv", p("t.csv"), "--json", p("c1.json"), "--svg", p("c1.svg")}) == 0 &&
              run({"case", "1", "--json", p("c2.json"), "--svg", p("c2.svg")}) == 0 &&
              run({"analyze", p("t.csv"), "--json", p("a1.json"), "--svg", p("a1.svg")}) == 0 &&
              run({"analyze", p("t.csv"), "--json", p("a2.json"), "--svg", p("a2.svg")}) == 0;
    c.expect(ok, "all invocations exit 0");
    c.expect(slurp(p("c1.json")) == slurp(p("c2.json")) && slurp(p("c1.svg")) == slurp(p("c2.svg")),
             "repeated `case` runs are byte-identical");
    c.expect(slurp(p("a1.json")) == slurp(p("a2.json")) && slurp(p("a1.svg")) == slurp(p("a2.svg")),
             "repeated `analyze` runs are byte-identical");
    c.expect(slurp(p("c1.json")) == slurp(p("a1.json")), "CSV dump re-analysis reproduces the case report");
    fs::remove_all(dir);
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"1  case 1 goodness of fit", case1_fit},
        {"2  case 1 column quality", case1_columns},
        {"3  case 1 row quality", case1_rows},
        {"4  case 1 correlations", case1_correlations},
        {"5  case 2 fit, correlation, column quality", case2},
        {"6  case 3 fit, correlations, %Q1 and Economics quality", case3},
        {"7  cluster order (Nordic group, isolated IT field)", cluster_order},
        {"8  SVD property suite", svd_suite},
        {"9  biplot identities", biplot_identities},
        {"10 baseline oracles", baseline_oracles},
        {"11 interface determinism", interface_determinism},
    };

    int failed = 0;
    for (const auto& [name, body] : criteria) {
        Check check;
        try {
            body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (check.passed() ? "PASS " : "FAIL ") << name << '\n';
        for (const auto& note : check.notes()) std::cout << "       " << note << '\n';
        if (!check.passed()) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
