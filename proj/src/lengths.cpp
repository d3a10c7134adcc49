#include "treearch/lengths.hpp"

#include <cmath>
#include <utility>

#include "treearch/errors.hpp"
#include "treearch/verify.hpp"

namespace treearch {

namespace {

struct Placement {
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<int> preorder;
};

Placement rooted_at(const Tree& t, int root) {
    Placement p;
    p.parent.assign(t.n(), -1);
    p.depth.assign(t.n(), 0);
    p.preorder.reserve(t.n());
    std::vector<int> stack{root};
    p.parent[root] = -1;
    std::vector<char> seen(t.n(), 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        p.preorder.push_back(v);
        for (int w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                p.parent[w] = v;
                p.depth[w] = p.depth[v] + 1;
                stack.push_back(w);
            }
    }
    return p;
}

DrawingReport make_report(const Tree& t, const SlopeMap& slopes, std::string strategy,
                          int placement_root) {
    DrawingReport rep;
    rep.kind = classify_tree(t).kind;
    rep.resolution = measure_resolution(t, slopes);
    rep.strategy = std::move(strategy);
    rep.placement_root = placement_root;
    return rep;
}

Drawing place_impl(const SlopeMap& slopes, const Tree& t, const Placement& p,
                   const std::vector<double>& lengths, std::string strategy,
                   int placement_root) {
    Drawing d;
    d.position.assign(t.n(), {0.0, 0.0});
    for (int v : p.preorder) {
        if (p.parent[v] < 0) continue;
        int u = p.parent[v];
        double angle = slopes.slope(u, v).radians();
        d.position[v] = {d.position[u][0] + lengths[v] * std::cos(angle),
                         d.position[u][1] + lengths[v] * std::sin(angle)};
    }
    d.slopes = slopes;
    d.report = make_report(t, slopes, std::move(strategy), placement_root);
    return d;
}

} // namespace

const char* strategy_name(LengthStrategy s) {
    switch (s) {
        case LengthStrategy::Uniform: return "uniform";
        case LengthStrategy::InverseDepth: return "inverse-depth";
        case LengthStrategy::SqrtSubtree: return "sqrt-subtree";
        case LengthStrategy::Weighted: return "weights";
    }
    return "?";
}

std::vector<double> strategy_lengths(const Tree& t, LengthStrategy s, int placement_root) {
    Placement p = rooted_at(t, placement_root);
    std::vector<double> len(t.n(), 0.0);
    switch (s) {
        case LengthStrategy::Uniform:
            for (int v = 0; v < t.n(); ++v)
                if (p.parent[v] >= 0) len[v] = 1.0;
            break;
        case LengthStrategy::InverseDepth:
            for (int v = 0; v < t.n(); ++v)
                if (p.parent[v] >= 0) len[v] = 1.0 / p.depth[v];
            break;
        case LengthStrategy::SqrtSubtree: {
            std::vector<int> size(t.n(), 1);
            for (auto it = p.preorder.rbegin(); it != p.preorder.rend(); ++it)
                if (p.parent[*it] >= 0) size[p.parent[*it]] += size[*it];
            for (int v = 0; v < t.n(); ++v)
                if (p.parent[v] >= 0) len[v] = std::sqrt(static_cast<double>(size[v]));
            break;
        }
        case LengthStrategy::Weighted:
            for (int v = 0; v < t.n(); ++v) {
                if (p.parent[v] < 0) continue;
                if (!t.has_weight(p.parent[v], v))
                    throw invalid_tree_error("weighted placement needs a weight on every edge");
                len[v] = t.weight(p.parent[v], v);
            }
            break;
    }
    return len;
}

Drawing place(const SlopeMap& slopes, const Tree& t, LengthStrategy strategy,
              int placement_root) {
    Placement p = rooted_at(t, placement_root);
    return place_impl(slopes, t, p, strategy_lengths(t, strategy, placement_root),
                      strategy_name(strategy), placement_root);
}

Drawing place(const SlopeMap& slopes, const Tree& t, LengthStrategy strategy) {
    return place(slopes, t, strategy, slopes.root());
}

Drawing place(const SlopeMap& slopes, const Tree& t, const std::vector<double>& lengths,
              int placement_root, const std::string& strategy_label) {
    if (static_cast<int>(lengths.size()) != t.n())
        throw invalid_tree_error("need one length per vertex");
    Placement p = rooted_at(t, placement_root);
    for (int v = 0; v < t.n(); ++v)
        if (p.parent[v] >= 0 && !(lengths[v] > 0.0))
            throw invalid_tree_error("edge lengths must be positive");
    return place_impl(slopes, t, p, lengths, strategy_label, placement_root);
}

Drawing place_radial(const SlopeMap& slopes, const Tree& t, int placement_root,
                     const std::vector<double>& radii) {
    Placement p = rooted_at(t, placement_root);
    int max_depth = 0;
    for (int v = 0; v < t.n(); ++v) max_depth = std::max(max_depth, p.depth[v]);

    std::vector<double> rad = radii;
    if (rad.empty())
        for (int d = 1; d <= max_depth; ++d) rad.push_back(static_cast<double>(d));
    if (static_cast<int>(rad.size()) < max_depth)
        throw verification_error("radial placement needs one radius per depth");
    double prev = 0.0;
    for (double r : rad) {
        if (!(r > prev))
            throw verification_error("radial placement needs strictly increasing radii");
        prev = r;
    }

    Drawing d;
    d.position.assign(t.n(), {0.0, 0.0});
    for (int v : p.preorder) {
        if (p.parent[v] < 0) continue;
        int u = p.parent[v];
        const double angle = slopes.slope(u, v).radians();
        const double ux = std::cos(angle), uy = std::sin(angle);
        const double px = d.position[u][0], py = d.position[u][1];
        const double radius = rad[p.depth[v] - 1];
        const double along = px * ux + py * uy;
        const double disc = along * along + radius * radius - (px * px + py * py);
        if (!(disc > 0.0))
            throw verification_error("radial placement: vertex outside its child's circle");
        const double step = -along + std::sqrt(disc);
        if (!(step > 0.0))
            throw verification_error("radial placement produced a non-positive edge length");
        d.position[v] = {px + step * ux, py + step * uy};
    }
    d.slopes = slopes;
    d.report = make_report(t, slopes, "radial", placement_root);
    return d;
}

Drawing morph(const SlopeMap& slopes, const Tree& t, LengthStrategy from,
              LengthStrategy to, double s, int placement_root) {
    const std::vector<double> a = strategy_lengths(t, from, placement_root);
    const std::vector<double> b = strategy_lengths(t, to, placement_root);
    std::vector<double> mix(t.n(), 0.0);
    for (int v = 0; v < t.n(); ++v) mix[v] = (1.0 - s) * a[v] + s * b[v];
    Placement p = rooted_at(t, placement_root);
    std::string label = std::string(strategy_name(from)) + "->" + strategy_name(to);
    return place_impl(slopes, t, p, mix, std::move(label), placement_root);
}

} // namespace treearch
