#pragma once

#include <string>
#include <vector>

#include "treearch/lengths.hpp"
#include "treearch/slopes.hpp"

namespace treearch {

struct RenderOptions {
    double scale = 40.0;          // drawing units to pixels
    double vertex_radius = 2.5;   // pixels
    double margin = 10.0;         // pixels around the geometry
    bool guide_circles = false;
    std::vector<double> circle_radii; // drawing units, used when guide_circles
    std::string stroke = "#1f2430";
    double stroke_width = 1.5;
    std::string vertex_fill = "#1f2430";
    std::string guide_stroke = "#b9c2cc";
};

// Deterministic SVG: one line per edge, one dot per vertex, optional guide
// circles centred on the placement root.  Identical drawings give
// byte-identical output.
std::string to_svg(const Drawing& d, const RenderOptions& opts = {});

// Machine-readable drawing: class, mode, exact resolution, positions, exact
// parent-edge slopes in turns, and the rotation system that was drawn.
std::string to_json(const Layout& lay, const Drawing& d);

// One-line summary, e.g. "class=general E(T)=4 resolution=π/2 (90°) verified=ok".
std::string report_line(const Layout& lay);

// The `layout` command line tool.  Returns the process exit code: 0 success,
// 1 parse error, 2 invalid tree, 3 failed self-verification.
int run_cli(const std::vector<std::string>& args);

} // namespace treearch
