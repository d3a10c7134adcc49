#include "treearch/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "treearch/optimize.hpp"

namespace treearch {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);
    return buf;
}

// Degrees with up to six decimals, trailing zeros dropped ("90", "105.5").
std::string fmt_degrees(double v) {
    std::string s = fmt6(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

} // namespace

std::string to_svg(const Drawing& d, const RenderOptions& opts) {
    const int n = static_cast<int>(d.position.size());
    const double s = opts.scale;

    // Scaled screen coordinates; SVG's y axis points down.
    auto sx = [&](int v) { return d.position[v][0] * s; };
    auto sy = [&](int v) { return -d.position[v][1] * s; };

    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (int v = 0; v < n; ++v) {
        minx = std::min(minx, sx(v));
        maxx = std::max(maxx, sx(v));
        miny = std::min(miny, sy(v));
        maxy = std::max(maxy, sy(v));
    }
    const int center = d.report.placement_root;
    if (opts.guide_circles) {
        for (double r : opts.circle_radii) {
            minx = std::min(minx, sx(center) - r * s);
            maxx = std::max(maxx, sx(center) + r * s);
            miny = std::min(miny, sy(center) - r * s);
            maxy = std::max(maxy, sy(center) + r * s);
        }
    }
    const double x0 = minx - opts.margin;
    const double y0 = miny - opts.margin;
    const double w = maxx - minx + 2 * opts.margin;
    const double h = maxy - miny + 2 * opts.margin;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt6(x0) + " " +
           fmt6(y0) + " " + fmt6(w) + " " + fmt6(h) + "\" width=\"" + fmt6(w) +
           "\" height=\"" + fmt6(h) + "\">\n";

    if (opts.guide_circles && !opts.circle_radii.empty()) {
        out += "  <g fill=\"none\" stroke=\"" + opts.guide_stroke +
               "\" stroke-width=\"0.75\">\n";
        for (double r : opts.circle_radii)
            out += "    <circle cx=\"" + fmt6(sx(center)) + "\" cy=\"" + fmt6(sy(center)) +
                   "\" r=\"" + fmt6(r * s) + "\"/>\n";
        out += "  </g>\n";
    }

    out += "  <g stroke=\"" + opts.stroke + "\" stroke-width=\"" + fmt6(opts.stroke_width) +
           "\" stroke-linecap=\"round\">\n";
    const int root = d.slopes.root();
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        int u = d.slopes.parent(v);
        out += "    <line x1=\"" + fmt6(sx(u)) + "\" y1=\"" + fmt6(sy(u)) + "\" x2=\"" +
               fmt6(sx(v)) + "\" y2=\"" + fmt6(sy(v)) + "\"/>\n";
    }
    out += "  </g>\n";

    out += "  <g fill=\"" + opts.vertex_fill + "\">\n";
    for (int v = 0; v < n; ++v)
        out += "    <circle cx=\"" + fmt6(sx(v)) + "\" cy=\"" + fmt6(sy(v)) + "\" r=\"" +
               fmt6(opts.vertex_radius) + "\"/>\n";
    out += "  </g>\n</svg>\n";
    return out;
}

std::string to_json(const Layout& lay, const Drawing& d) {
    nlohmann::json j;
    j["class"] = kind_name(lay.classification.kind);
    j["mode"] = lay.mode == LayoutMode::Free ? "free" : "fixed-embedding";
    j["resolution"] = {{"turns", lay.resolution.str()},
                       {"radians", lay.resolution.pi_string()},
                       {"degrees", lay.resolution.degrees()}};
    j["root"] = lay.slope_root;
    j["placement_root"] = d.report.placement_root;
    j["strategy"] = d.report.strategy;

    nlohmann::json pos = nlohmann::json::array();
    for (const auto& p : d.position) pos.push_back({p[0], p[1]});
    j["positions"] = std::move(pos);

    nlohmann::json slopes = nlohmann::json::array();
    for (int v = 0; v < lay.tree.n(); ++v) {
        if (v == lay.slopes.root()) continue;
        slopes.push_back({{"parent", lay.slopes.parent(v)},
                          {"vertex", v},
                          {"turns", lay.slopes.down(v).str()}});
    }
    j["slopes"] = std::move(slopes);

    nlohmann::json emb = nlohmann::json::array();
    for (int v = 0; v < lay.tree.n(); ++v) emb.push_back(lay.tree.neighbors(v));
    j["embedding"] = std::move(emb);

    nlohmann::json labels = nlohmann::json::object();
    for (int v = 0; v < lay.tree.n(); ++v)
        if (!lay.tree.label(v).empty()) labels[std::to_string(v)] = lay.tree.label(v);
    if (!labels.empty()) j["labels"] = std::move(labels);

    return j.dump(2) + "\n";
}

std::string report_line(const Layout& lay) {
    std::string out = "class=";
    out += kind_name(lay.classification.kind);
    switch (lay.classification.kind) {
        case TreeKind::Path:
            break;
        case TreeKind::Rake:
            out += " k=" + std::to_string(lay.classification.rake.double_turns);
            break;
        case TreeKind::TripleRake:
            out += " s=" + std::to_string(lay.classification.triple.short_paths);
            out += " d=" + std::to_string(lay.classification.triple.double_turns);
            break;
        case TreeKind::General: {
            ForkReport rep = fork_report(lay.tree, choose_root(lay.tree));
            if (lay.mode == LayoutMode::Free)
                out += " E(T)=" + std::to_string(rep.total_excess);
            else
                out += " f=" + std::to_string(rep.total_forks);
            break;
        }
    }
    out += " resolution=" + lay.resolution.pi_string() + " (" +
           fmt_degrees(lay.resolution.degrees()) + "°) verified=ok";
    return out;
}

} // namespace treearch
