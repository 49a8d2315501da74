#pragma once

#include "biplot/biplot.hpp"
#include "biplot/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace biplot {

struct PlotSpec {
    int width = 720;
    int height = 720;
    /// Multiplier applied to column markers for display. Unset picks the
    /// value that makes the longest marker span 40% of the plot half-width.
    std::optional<double> vector_scale;
    bool show_labels = true;
};

/// A generic 2-D map: dots with labels, optional arrows from the origin and
/// an optional second point set drawn as squares.
struct MapPlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    Matrix points;  // n x 2
    std::vector<std::string> point_labels;
    Matrix arrows;  // m x 2, already scaled
    std::vector<std::string> arrow_labels;
    Matrix squares;  // k x 2
    std::vector<std::string> square_labels;
    std::vector<std::string> legend;
};

/// Static SVG 1.1 text; identical input gives a byte-identical document.
std::string render_map(const MapPlot& plot, const PlotSpec& spec = {});

/// Display multiplier for column markers under `spec`.
double effective_vector_scale(const BiplotModel& model, const PlotSpec& spec);

/// Biplot: one dot per row marker and one arrow per column marker, origin at
/// the centroid, axes annotated with their variance share. Requires dims == 2.
std::string render_svg(const BiplotModel& model, const QualityReport& quality, const PlotSpec& spec = {});

} // namespace biplot
