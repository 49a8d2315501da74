#include "biplot/svg.hpp"

#include "biplot/error.hpp"
#include "biplot/format.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace biplot {
namespace {

constexpr double kMargin = 64.0;

double max_abs(const Matrix& m) {
    double out = 0.0;
    for (double v : m.data()) out = std::max(out, std::abs(v));
    return out;
}

std::string percent(double share) { return fixed(100.0 * share, 1) + "%"; }

class Canvas {
public:
    Canvas(const PlotSpec& spec, double half_range)
        : width_(spec.width), height_(spec.height),
          scale_(std::min(spec.width - 2 * kMargin, spec.height - 2 * kMargin) / (2.0 * half_range)) {}

    double x(double v) const { return width_ / 2.0 + v * scale_; }
    double y(double v) const { return height_ / 2.0 - v * scale_; }
    double left() const { return kMargin; }
    double right() const { return width_ - kMargin; }
    double top() const { return kMargin; }
    double bottom() const { return height_ - kMargin; }

private:
    double width_;
    double height_;
    double scale_;
};

std::string px(double v) { return fixed(v, 2); }

void text(std::ostream& out, const char* cls, double x, double y, const std::string& s, const char* anchor = "start") {
    out << "  <text class=\"" << cls << "\" x=\"" << px(x) << "\" y=\"" << px(y) << "\" text-anchor=\"" << anchor
        << "\">" << xml_escape(s) << "</text>\n";
}

} // namespace

std::string render_map(const MapPlot& plot, const PlotSpec& spec) {
    if (spec.width <= 2 * kMargin || spec.height <= 2 * kMargin)
        throw InputError("plot size must exceed " + std::to_string(2 * static_cast<int>(kMargin)) + " pixels");
    for (const Matrix* m : {&plot.points, &plot.arrows, &plot.squares})
        if (!m->empty() && m->cols() != 2) throw InputError("render_map: coordinates must be two-dimensional");

    double extent = std::max({max_abs(plot.points), max_abs(plot.arrows), max_abs(plot.squares)});
    if (!(extent > 0.0)) extent = 1.0;
    const Canvas c(spec, extent * 1.1);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
    out << "  <title>" << xml_escape(plot.title) << "</title>\n";
    out << "  <defs>\n"
           "    <marker id=\"arrowhead\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" "
           "markerHeight=\"7\" orient=\"auto\">\n"
           "      <path d=\"M0,0 L10,5 L0,10 z\" fill=\"#b2182b\"/>\n"
           "    </marker>\n"
           "  </defs>\n";
    out << "  <style>\n"
           "    .axis { stroke: #999999; stroke-width: 1; stroke-dasharray: 4 3; }\n"
           "    .row { fill: #2166ac; }\n"
           "    .arrow { stroke: #b2182b; stroke-width: 1.5; }\n"
           "    .col-point { fill: #1b7837; }\n"
           "    text { font-family: sans-serif; font-size: 11px; }\n"
           "    .title { font-size: 14px; font-weight: bold; }\n"
           "    .col-label { fill: #b2182b; }\n"
           "  </style>\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
        << "\" fill=\"white\"/>\n";

    out << "  <line class=\"axis\" x1=\"" << px(c.left()) << "\" y1=\"" << px(c.y(0)) << "\" x2=\"" << px(c.right())
        << "\" y2=\"" << px(c.y(0)) << "\"/>\n";
    out << "  <line class=\"axis\" x1=\"" << px(c.x(0)) << "\" y1=\"" << px(c.top()) << "\" x2=\"" << px(c.x(0))
        << "\" y2=\"" << px(c.bottom()) << "\"/>\n";
    text(out, "title", spec.width / 2.0, kMargin / 2.0, plot.title, "middle");
    text(out, "axis-label", c.right(), c.y(0) - 6.0, plot.x_label, "end");
    text(out, "axis-label", c.x(0) + 6.0, c.top() + 12.0, plot.y_label);

    for (std::size_t i = 0; i < plot.points.rows(); ++i) {
        const double x = c.x(plot.points(i, 0)), y = c.y(plot.points(i, 1));
        out << "  <circle class=\"row\" cx=\"" << px(x) << "\" cy=\"" << px(y) << "\" r=\"3.5\"/>\n";
        if (spec.show_labels && i < plot.point_labels.size()) text(out, "row-label", x + 5.0, y - 5.0, plot.point_labels[i]);
    }
    for (std::size_t i = 0; i < plot.squares.rows(); ++i) {
        const double x = c.x(plot.squares(i, 0)), y = c.y(plot.squares(i, 1));
        out << "  <rect class=\"col-point\" x=\"" << px(x - 3.5) << "\" y=\"" << px(y - 3.5)
            << "\" width=\"7\" height=\"7\"/>\n";
        if (spec.show_labels && i < plot.square_labels.size())
            text(out, "col-label", x + 5.0, y - 5.0, plot.square_labels[i]);
    }
    for (std::size_t j = 0; j < plot.arrows.rows(); ++j) {
        const double x = c.x(plot.arrows(j, 0)), y = c.y(plot.arrows(j, 1));
        out << "  <line class=\"arrow\" x1=\"" << px(c.x(0)) << "\" y1=\"" << px(c.y(0)) << "\" x2=\"" << px(x)
            << "\" y2=\"" << px(y) << "\" marker-end=\"url(#arrowhead)\"/>\n";
        if (spec.show_labels && j < plot.arrow_labels.size()) {
            const char* anchor = plot.arrows(j, 0) < 0.0 ? "end" : "start";
            const double dx = plot.arrows(j, 0) < 0.0 ? -4.0 : 4.0;
            text(out, "col-label", x + dx, y - 4.0, plot.arrow_labels[j], anchor);
        }
    }
    double legend_y = spec.height - kMargin / 2.0;
    for (auto it = plot.legend.rbegin(); it != plot.legend.rend(); ++it) {
        text(out, "legend", kMargin, legend_y, *it);
        legend_y -= 14.0;
    }
    out << "</svg>\n";
    return out.str();
}

double effective_vector_scale(const BiplotModel& model, const PlotSpec& spec) {
    if (spec.vector_scale) {
        if (!(*spec.vector_scale > 0.0) || !std::isfinite(*spec.vector_scale))
            throw InputError("vector scale must be a positive number");
        return *spec.vector_scale;
    }
    const auto lengths = column_lengths(model);
    const double longest = lengths.empty() ? 0.0 : *std::max_element(lengths.begin(), lengths.end());
    const double half_width = max_abs(model.row_markers) * 1.1;
    if (!(longest > 0.0) || !(half_width > 0.0)) return 1.0;
    return 0.4 * half_width / longest;
}

std::string render_svg(const BiplotModel& model, const QualityReport& quality, const PlotSpec& spec) {
    if (model.dims != 2) throw InputError("render_svg: biplots are drawn in 2 dimensions, model has " +
                                          std::to_string(model.dims));
    const double vscale = effective_vector_scale(model, spec);
    const auto shares = variance_shares(model.sigma_all);

    MapPlot plot;
    plot.title = std::string(to_string(model.type())) + " biplot (gamma " + shortest(model.gamma) + ")";
    plot.x_label = "Axis 1 (" + percent(shares[0]) + ")";
    plot.y_label = "Axis 2 (" + percent(shares[1]) + ")";
    plot.points = model.row_markers;
    plot.point_labels = model.labels.rows;
    plot.arrows = vscale * model.col_markers;
    plot.arrow_labels = model.labels.cols;
    plot.legend = {"dots: rows, arrows: columns", "vector scale x" + shortest(vscale),
                   "goodness of fit " + percent(quality.qr_overall)};
    return render_map(plot, spec);
}

} // namespace biplot
