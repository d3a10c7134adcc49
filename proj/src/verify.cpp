#include "treearch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace treearch {

namespace {

const Rational kHalf(1, 2);

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

double point_seg_dist(double px, double py, double ax, double ay, double bx, double by) {
    double dx = bx - ax, dy = by - ay;
    double len2 = dx * dx + dy * dy;
    double s = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    double qx = ax + s * dx - px;
    double qy = ay + s * dy - py;
    return std::sqrt(qx * qx + qy * qy);
}

} // namespace

bool is_convex_arch(const std::vector<TurnAngle>& dirs) {
    if (dirs.empty()) throw std::invalid_argument("is_convex_arch: empty direction sequence");
    Rational rise(0);
    for (std::size_t i = 1; i < dirs.size(); ++i) {
        rise += TurnAngle::gap(dirs[i - 1], dirs[i]).value();
        if (rise > kHalf) return false;
    }
    return true;
}

std::vector<Violation> check_convex_faces(const Tree& t, const SlopeMap& slopes) {
    std::vector<Violation> out;
    if (t.n() <= 1) return out;
    const int root = slopes.root();

    // One pass over the face tour; leaf arrivals cut it into the paths between
    // radially consecutive leaves.  Walked forward, a path encloses a convex
    // face exactly when its directions never drop by more than 1/2 turn in
    // total (the reversed chain is then a nondecreasing half-turn sweep).
    std::vector<TurnAngle> dirs;
    dirs.reserve(2 * (t.n() - 1));
    std::vector<int> end_pos, end_leaf;
    int idx = 0;
    for_each_tour_edge(t, root, t.neighbors(root)[0], [&](int u, int v) {
        dirs.push_back(slopes.slope(u, v));
        if (t.degree(v) <= 1) {
            end_pos.push_back(idx);
            end_leaf.push_back(v);
        }
        ++idx;
    });

    const int total = static_cast<int>(dirs.size());
    const int nleaf = static_cast<int>(end_pos.size());
    for (int i = 0; i < nleaf; ++i) {
        int p = end_pos[i];
        int q = end_pos[(i + 1) % nleaf];
        Rational drop(0);
        bool bad = false;
        for (int j = (p + 1) % total; j != q; j = (j + 1) % total) {
            drop += TurnAngle::gap(dirs[(j + 1) % total], dirs[j]).value();
            if (drop > kHalf) {
                bad = true;
                break;
            }
        }
        if (bad) {
            Violation v;
            v.kind = ViolationKind::NonConvexArch;
            v.a = end_leaf[i];
            v.b = end_leaf[(i + 1) % nleaf];
            v.detail = "path between leaves " + std::to_string(v.a) + " and " +
                       std::to_string(v.b) + " turns by more than a half turn";
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Violation> check_slope_consistency(const Tree& t, const SlopeMap& slopes) {
    std::vector<Violation> out;
    if (t.n() <= 1) return out;

    for (int v = 0; v < t.n(); ++v) {
        if (t.degree(v) < 2) continue;
        const auto& nb = t.neighbors(v);
        Rational sweep(0);
        bool coincident = false;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            TurnAngle a = slopes.slope(v, nb[i]);
            TurnAngle b = slopes.slope(v, nb[(i + 1) % nb.size()]);
            TurnAngle gap = TurnAngle::gap(a, b);
            if (gap == TurnAngle() && a == b) coincident = true;
            sweep += gap.value();
        }
        if (coincident) {
            out.push_back({ViolationKind::ResolutionMismatch, v, -1,
                           "coincident edge directions at vertex " + std::to_string(v)});
        } else if (sweep != Rational(1)) {
            out.push_back({ViolationKind::NonConvexArch, v, -1,
                           "edge directions disagree with the rotation at vertex " +
                               std::to_string(v) + " (wind " + sweep.str() + ")"});
        }
    }

    // Leaf directions must sweep exactly one turn in radial order.
    std::vector<int> leaves = leaves_in_tour_order(t, slopes.root());
    if (leaves.size() >= 2) {
        auto into_leaf = [&](int leaf) {
            if (leaf == slopes.root()) return slopes.slope(t.neighbors(leaf)[0], leaf);
            return slopes.down(leaf);
        };
        Rational sweep(0);
        for (std::size_t i = 0; i < leaves.size(); ++i)
            sweep += TurnAngle::gap(into_leaf(leaves[i]),
                                    into_leaf(leaves[(i + 1) % leaves.size()]))
                         .value();
        if (sweep != Rational(1))
            out.push_back({ViolationKind::NonConvexArch, -1, -1,
                           "leaf directions sweep " + sweep.str() + " turns instead of 1"});
    }
    return out;
}

TurnAngle measure_resolution(const Tree& t, const SlopeMap& slopes) {
    bool any = false;
    TurnAngle best = TurnAngle::turns(1, 2);
    std::vector<Rational> vals;
    for (int v = 0; v < t.n(); ++v) {
        if (t.degree(v) < 2) continue;
        vals.clear();
        for (int w : t.neighbors(v)) vals.push_back(slopes.slope(v, w).value());
        std::sort(vals.begin(), vals.end());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            TurnAngle gap = TurnAngle::gap(TurnAngle(vals[i]),
                                           TurnAngle(vals[(i + 1) % vals.size()]));
            if (!any || gap < best) {
                best = gap;
                any = true;
            }
        }
    }
    return best;
}

std::vector<Violation> check_planar(const Tree& t,
                                    const std::vector<std::array<double, 2>>& pos,
                                    double tol) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < t.n(); ++u)
        for (int v : t.neighbors(u))
            if (u < v) edges.emplace_back(u, v);

    std::vector<Violation> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [u1, v1] = edges[i];
            auto [u2, v2] = edges[j];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
            const auto &a = pos[u1], &b = pos[v1], &c = pos[u2], &d = pos[v2];
            double d1 = cross2(b[0] - a[0], b[1] - a[1], c[0] - a[0], c[1] - a[1]);
            double d2 = cross2(b[0] - a[0], b[1] - a[1], d[0] - a[0], d[1] - a[1]);
            double d3 = cross2(d[0] - c[0], d[1] - c[1], a[0] - c[0], a[1] - c[1]);
            double d4 = cross2(d[0] - c[0], d[1] - c[1], b[0] - c[0], b[1] - c[1]);
            // Orientation signs are only trusted outside the rounding noise of
            // the cross products (a few ulp of coordinate^2); anything closer
            // to zero - e.g. exactly collinear chains whose accumulated
            // positions stray by one ulp - is settled by the distance test.
            double m = 0.0;
            for (const auto* p : {&a, &b, &c, &d})
                m = std::max({m, std::abs((*p)[0]), std::abs((*p)[1])});
            const double eps = 32.0 * m * m * std::numeric_limits<double>::epsilon();
            auto sgn = [eps](double x) { return x > eps ? 1 : (x < -eps ? -1 : 0); };
            bool proper = sgn(d1) * sgn(d2) < 0 && sgn(d3) * sgn(d4) < 0;
            double touch = std::min(
                std::min(point_seg_dist(a[0], a[1], c[0], c[1], d[0], d[1]),
                         point_seg_dist(b[0], b[1], c[0], c[1], d[0], d[1])),
                std::min(point_seg_dist(c[0], c[1], a[0], a[1], b[0], b[1]),
                         point_seg_dist(d[0], d[1], a[0], a[1], b[0], b[1])));
            if (proper || touch <= tol) {
                Violation viol;
                viol.kind = ViolationKind::Crossing;
                viol.a = static_cast<int>(i);
                viol.b = static_cast<int>(j);
                viol.detail = "edges " + std::to_string(u1) + "-" + std::to_string(v1) +
                              " and " + std::to_string(u2) + "-" + std::to_string(v2) +
                              (proper ? " cross" : " touch");
                out.push_back(viol);
            }
        }
    }
    return out;
}

int brute_force_min_forks(const Tree& t, int root, int max_n) {
    if (t.n() > max_n)
        throw std::invalid_argument("brute_force_min_forks: tree larger than the size guard");
    const int n = t.n();
    if (n <= 2) return fork_report(t, root).total_forks;

    std::vector<int> parent(n, -2);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(v))
            if (w != parent[v]) {
                parent[w] = v;
                stack.push_back(w);
            }
    }

    std::vector<std::vector<int>> fixed(n), perm(n);
    for (int v = 0; v < n; ++v) {
        if (v == root) {
            fixed[v] = {t.neighbors(v)[0]};
            perm[v] = std::vector<int>(t.neighbors(v).begin() + 1, t.neighbors(v).end());
        } else {
            fixed[v] = {parent[v]};
            for (int w : t.neighbors(v))
                if (w != parent[v]) perm[v].push_back(w);
        }
        std::sort(perm[v].begin(), perm[v].end());
    }

    int best = -1;
    for (;;) {
        std::vector<std::vector<int>> adj(n);
        for (int v = 0; v < n; ++v) {
            adj[v] = fixed[v];
            adj[v].insert(adj[v].end(), perm[v].begin(), perm[v].end());
        }
        int forks = fork_report(t.with_rotation(std::move(adj)), root).total_forks;
        if (best < 0 || forks < best) best = forks;

        int v = 0;
        while (v < n && !std::next_permutation(perm[v].begin(), perm[v].end())) ++v;
        if (v == n) break;
    }
    return best;
}

} // namespace treearch
