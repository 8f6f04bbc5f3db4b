#include "media/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace media {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", x + 0.0);  // normalize -0
    return buf;
}

const char* kPalette[12] = {"#1b4965", "#b5451b", "#3c7a1e", "#6d3fa0", "#a03f62", "#1e7a74",
                            "#7a6a1e", "#45321b", "#243da0", "#a08c3f", "#62a03f", "#a01b2c"};

}  // namespace

SvgDocument emit_svg(const std::vector<std::pair<double, double>>& pos,
                     const std::vector<std::tuple<int, int, int>>& edges_with_class,
                     int class_count) {
    SvgDocument doc;
    doc.class_count = class_count;
    if (pos.empty()) return doc;
    double min_x = pos[0].first, max_x = pos[0].first;
    double min_y = pos[0].second, max_y = pos[0].second;
    for (auto [x, y] : pos) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    // flip y so the drawing's y axis points up on screen
    for (auto [x, y] : pos) doc.markers.push_back({x, max_y - y});
    for (auto [u, v, cls] : edges_with_class)
        doc.lines.push_back(
            {pos[u].first, max_y - pos[u].second, pos[v].first, max_y - pos[v].second, cls});
    doc.min_x = min_x;
    doc.min_y = 0;
    doc.width = max_x - min_x;
    doc.height = max_y - min_y;
    return doc;
}

SvgDocument emit_svg(const PlanarPlacement& pp) {
    std::vector<std::pair<double, double>> pos;
    for (auto [x, y] : pp.pos) pos.emplace_back(static_cast<double>(x), static_cast<double>(y));
    std::vector<std::tuple<int, int, int>> edges;
    int classes = 0;
    for (const auto& e : pp.edges) {
        edges.emplace_back(e.u, e.v, e.axis);
        classes = std::max(classes, e.axis + 1);
    }
    return emit_svg(pos, edges, classes);
}

SvgDocument emit_svg(const SymmetricDrawing& sd) {
    std::vector<std::tuple<int, int, int>> edges;
    int classes = 0;
    for (const auto& e : sd.edges) {
        edges.emplace_back(e.u, e.v, e.theta_class);
        classes = std::max(classes, e.theta_class + 1);
    }
    return emit_svg(sd.pos, edges, classes);
}

std::string SvgDocument::to_string(const SvgStyle& style) const {
    const double s = style.scale;
    const double pad = 1.0;
    double vbx = (min_x - pad) * s, vby = (min_y - pad) * s;
    double vbw = (width + 2 * pad) * s, vbh = (height + 2 * pad) * s;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(vbx) + " " + fmt(vby) +
           " " + fmt(vbw) + " " + fmt(vbh) + "\">\n";
    out += "<style>\n";
    out += ".vx { fill: #000000; stroke: none; }\n";
    for (int c = 0; c < class_count; ++c) {
        const char* color = style.monochrome ? "#000000" : kPalette[c % 12];
        out += ".c" + std::to_string(c) + " { stroke: " + color + "; stroke-width: " +
               fmt(style.stroke_width * s) + "; stroke-linecap: round; }\n";
    }
    out += "</style>\n<g>\n";
    for (const auto& l : lines)
        out += "<line class=\"c" + std::to_string(l.cls) + "\" x1=\"" + fmt(l.x1 * s) + "\" y1=\"" +
               fmt(l.y1 * s) + "\" x2=\"" + fmt(l.x2 * s) + "\" y2=\"" + fmt(l.y2 * s) + "\"/>\n";
    for (const auto& m : markers)
        out += "<circle class=\"vx\" cx=\"" + fmt(m.x * s) + "\" cy=\"" + fmt(m.y * s) +
               "\" r=\"" + fmt(style.vertex_radius * s) + "\"/>\n";
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace media
