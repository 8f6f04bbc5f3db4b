#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "media/arrangement.hpp"
#include "media/projection.hpp"

namespace media {

struct SvgStyle {
    double scale = 40;           // drawing units to pixels
    double vertex_radius = 0.12; // in drawing units
    double stroke_width = 0.05;
    bool monochrome = true;      // per-class colors otherwise
};

/// Renderable drawing: one line per edge (styled by class), one marker per
/// vertex; viewBox padded by one drawing unit.
struct SvgDocument {
    struct Line {
        double x1, y1, x2, y2;
        int cls;
    };
    struct Marker {
        double x, y;
    };
    std::vector<Line> lines;
    std::vector<Marker> markers;
    int class_count = 0;
    double min_x = 0, min_y = 0, width = 0, height = 0;

    std::string to_string(const SvgStyle& style = {}) const;
};

SvgDocument emit_svg(const std::vector<std::pair<double, double>>& pos,
                     const std::vector<std::tuple<int, int, int>>& edges_with_class,
                     int class_count);

SvgDocument emit_svg(const PlanarPlacement& pp);
SvgDocument emit_svg(const SymmetricDrawing& sd);

}  // namespace media
