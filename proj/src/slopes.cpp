#include "treearch/slopes.hpp"

#include <array>
#include <cstddef>
#include <deque>
#include <utility>
#include <vector>

#include "treearch/errors.hpp"
#include "treearch/verify.hpp"

namespace treearch {

namespace {

// ---------------------------------------------------------------------------
// Difference-constraint solver
// ---------------------------------------------------------------------------

// Constraints of the form x[j] >= x[i] + w over lifted edge directions (real
// line, in turns).  solve() returns the least values reachable from the fixed
// seeds; a positive cycle would make the relaxation diverge, which is reported
// as a verification_error because the layout theory guarantees feasibility.
class DiffSystem {
public:
    explicit DiffSystem(int nvars)
        : adj_(nvars), value_(nvars), defined_(nvars, 0), bumps_(nvars, 0) {}

    void at_least(int i, int j, const Rational& w) { adj_[i].push_back({j, w}); }

    // x[j] - x[i] constrained to [lo, hi].
    void between(int i, int j, const Rational& lo, const Rational& hi) {
        at_least(i, j, lo);
        at_least(j, i, Rational(0) - hi);
    }

    void fix(int i, const Rational& v) {
        value_[i] = v;
        defined_[i] = 1;
        seeds_.push_back(i);
    }

    std::vector<Rational> solve() {
        const int n = static_cast<int>(adj_.size());
        const int limit = n + 8;
        std::deque<int> queue(seeds_.begin(), seeds_.end());
        std::vector<char> queued(n, 0);
        for (int s : seeds_) queued[s] = 1;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            queued[i] = 0;
            for (const auto& [j, w] : adj_[i]) {
                Rational cand = value_[i] + w;
                if (defined_[j] && !(value_[j] < cand)) continue;
                value_[j] = cand;
                defined_[j] = 1;
                if (++bumps_[j] > limit)
                    throw verification_error("slope constraints have no solution");
                if (!queued[j]) {
                    queued[j] = 1;
                    queue.push_back(j);
                }
            }
        }
        for (char d : defined_)
            if (!d) throw verification_error("slope constraints leave a direction free");
        return value_;
    }

private:
    std::vector<std::vector<std::pair<int, Rational>>> adj_;
    std::vector<Rational> value_;
    std::vector<char> defined_;
    std::vector<int> bumps_;
    std::vector<int> seeds_;
};

// Nondecreasing chain of lifted leaf directions in face-tour order.  Each
// entry is a solver variable plus a constant lift offset; wrap() closes the
// cycle one full turn up.
struct LeafChain {
    std::vector<std::pair<int, Rational>> entries;

    void add(int var, const Rational& offset) { entries.push_back({var, offset}); }

    void apply(DiffSystem& sys) const {
        for (std::size_t i = 0; i + 1 < entries.size(); ++i)
            sys.at_least(entries[i].first, entries[i + 1].first,
                         entries[i].second - entries[i + 1].second);
        if (entries.size() > 1)
            sys.at_least(entries.back().first, entries.front().first,
                         entries.back().second - entries.front().second - Rational(1));
    }
};

// ---------------------------------------------------------------------------
// Edge painting
// ---------------------------------------------------------------------------

void set_edge(SlopeMap& map, int u, int v, const TurnAngle& dir) {
    if (map.parent(v) == u)
        map.set_down(v, dir);
    else
        map.set_down(u, dir.opposite());
}

// Paints the chain starting with the edge from->next and continuing through
// degree-2 vertices, every edge pointing away from `from` at direction d.
// Returns the far end of the chain (the first vertex of degree != 2).
int paint_ray(SlopeMap& map, const Tree& t, int from, int next, const TurnAngle& d) {
    int prev = from, cur = next;
    set_edge(map, prev, cur, d);
    while (t.degree(cur) == 2) {
        const auto& nb = t.neighbors(cur);
        int cont = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = cont;
        set_edge(map, prev, cur, d);
    }
    return cur;
}

// Far end of the chain starting with from->next, without painting anything.
int ray_end(const Tree& t, int from, int next) {
    int prev = from, cur = next;
    while (t.degree(cur) == 2) {
        const auto& nb = t.neighbors(cur);
        int cont = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = cont;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

Layout layout_path(Tree tree) {
    int root = 0;
    while (tree.degree(root) > 1) ++root;
    SlopeMap map(tree, root);
    if (tree.n() > 1) paint_ray(map, tree, root, tree.neighbors(root)[0], TurnAngle());
    Layout out;
    out.tree = std::move(tree);
    out.slope_root = root;
    out.slopes = std::move(map);
    return out;
}

// ---------------------------------------------------------------------------
// Rakes
// ---------------------------------------------------------------------------

// The degree-3 vertices along the spine in walk order, each with its pendant
// (tooth) neighbor, the neighbors starting the segments on either side, and
// its bend direction.  At the two spine ends both non-spine neighbors are
// pendant paths; the roles are chosen so that end vertices always bend left.
struct RakeSkeleton {
    std::vector<int> verts;
    std::vector<int> tooth;
    std::vector<int> prev_nb;
    std::vector<int> next_nb;
    std::vector<Handedness> hand;
};

RakeSkeleton rake_skeleton(const Tree& t, const RakeStats& stats) {
    RakeSkeleton sk;
    const std::vector<int>& spine = stats.spine;
    const int len = static_cast<int>(spine.size());
    if (len == 1) {
        const auto& nb = t.neighbors(spine[0]);
        sk.verts = {spine[0]};
        sk.prev_nb = {nb[0]};
        sk.tooth = {nb[1]};
        sk.next_nb = {nb[2]};
        sk.hand = {Handedness::Left};
        return sk;
    }
    for (int i = 0; i < len; ++i) {
        int v = spine[i];
        if (t.degree(v) != 3) continue;
        int prev, next, tth;
        Handedness h;
        if (i == 0) {
            next = spine[1];
            prev = t.rot_next(v, next);
            tth = t.rot_next(v, prev);
            h = Handedness::Left;
        } else if (i == len - 1) {
            prev = spine[i - 1];
            tth = t.rot_next(v, prev);
            next = t.rot_next(v, tth);
            h = Handedness::Left;
        } else {
            prev = spine[i - 1];
            next = spine[i + 1];
            const auto& nb = t.neighbors(v);
            tth = nb[0] + nb[1] + nb[2] - prev - next;
            h = turn_hand(t, v, prev, next);
        }
        sk.verts.push_back(v);
        sk.prev_nb.push_back(prev);
        sk.next_nb.push_back(next);
        sk.tooth.push_back(tth);
        sk.hand.push_back(h);
    }
    return sk;
}

// Adds the direction constraints of one spine vertex: S[i] and S[i+1] are the
// lifted directions of the segments entering and leaving it (walk order), C
// its tooth direction, theta = 1/4 + eps the target resolution.  A left bend
// turns the spine counterclockwise by [2*eps, 1/4 - eps] and places the tooth
// in the reflex wedge behind it; a right bend mirrors that.
void spine_vertex_constraints(DiffSystem& sys, Handedness hand, int s_in, int s_out,
                              int c, const Rational& eps) {
    const Rational bend_lo = eps * Rational(2);
    const Rational bend_hi = Rational(1, 4) - eps;
    if (hand == Handedness::Left) {
        sys.between(s_in, s_out, bend_lo, bend_hi);
        sys.at_least(s_in, c, Rational(3, 4) + eps);
        sys.at_least(c, s_out, eps - Rational(3, 4));
    } else {
        sys.between(s_out, s_in, bend_lo, bend_hi);
        sys.at_least(s_out, c, Rational(1, 4) + eps);
        sys.at_least(c, s_in, eps - Rational(1, 4));
    }
}

Layout layout_rake(Tree tree) {
    const RakeStats stats = rake_stats(tree);
    const RakeSkeleton sk = rake_skeleton(tree, stats);
    const int m = static_cast<int>(sk.verts.size());
    const Rational eps(1, 2 * (6 + 2 * stats.double_turns));

    // Variables: lifted directions of the m+1 spine segments (tail, m-1
    // internal segments, tail) and of the m teeth.
    DiffSystem sys(2 * m + 1);
    auto S = [](int i) { return i; };
    auto C = [m](int i) { return m + 1 + i; };
    sys.fix(S(0), Rational(0));
    for (int i = 0; i < m; ++i)
        spine_vertex_constraints(sys, sk.hand[i], S(i), S(i + 1), C(i), eps);

    // Leaves in tour order: near tail, left teeth outward, far tail, right
    // teeth homeward.  Left teeth point backward (no lift), the far tail and
    // right teeth are reached past the far end (one lift).
    LeafChain chain;
    chain.add(S(0), Rational(1, 2));
    for (int i = 0; i < m; ++i)
        if (sk.hand[i] == Handedness::Left) chain.add(C(i), Rational(0));
    chain.add(S(m), Rational(1));
    for (int i = m - 1; i >= 0; --i)
        if (sk.hand[i] == Handedness::Right) chain.add(C(i), Rational(1));
    chain.apply(sys);

    const std::vector<Rational> x = sys.solve();

    const int root = ray_end(tree, sk.verts[0], sk.prev_nb[0]);
    SlopeMap map(tree, root);
    paint_ray(map, tree, sk.verts[0], sk.prev_nb[0], TurnAngle(x[S(0)]).opposite());
    for (int i = 1; i < m; ++i)
        paint_ray(map, tree, sk.verts[i - 1], sk.next_nb[i - 1], TurnAngle(x[S(i)]));
    paint_ray(map, tree, sk.verts[m - 1], sk.next_nb[m - 1], TurnAngle(x[S(m)]));
    for (int i = 0; i < m; ++i)
        paint_ray(map, tree, sk.verts[i], sk.tooth[i], TurnAngle(x[C(i)]));

    Layout out;
    out.tree = std::move(tree);
    out.slope_root = root;
    out.slopes = std::move(map);
    return out;
}

Tree rake_with_hands(const Tree& t, const RakeSkeleton& sk) {
    std::vector<std::vector<int>> rot;
    rot.reserve(t.n());
    for (int v = 0; v < t.n(); ++v) rot.push_back(t.neighbors(v));
    for (std::size_t i = 0; i < sk.verts.size(); ++i) {
        int v = sk.verts[i];
        if (i % 2 == 0)
            rot[v] = {sk.prev_nb[i], sk.tooth[i], sk.next_nb[i]};
        else
            rot[v] = {sk.prev_nb[i], sk.next_nb[i], sk.tooth[i]};
    }
    return t.with_rotation(std::move(rot));
}

// ---------------------------------------------------------------------------
// Triple rakes
// ---------------------------------------------------------------------------

// One hull path leaving the hub: its turn vertices in hub-outward order (same
// layout as RakeSkeleton) and the two-pendant fork vertex at the bottom.
struct TripleBranch {
    int first_nb = -1;
    std::vector<int> verts;
    std::vector<int> tooth;
    std::vector<int> prev_nb;
    std::vector<int> next_nb;
    std::vector<Handedness> hand;
    int fork = -1;
    int pend_a = -1; // fork pendant first in rotation after the hull edge
    int pend_b = -1;
};

TripleBranch triple_branch(const Tree& t, const std::vector<char>& hull, int hub,
                           int first_nb) {
    TripleBranch b;
    b.first_nb = first_nb;
    int prev = hub, cur = first_nb;
    for (;;) {
        while (t.degree(cur) == 2) {
            const auto& nb = t.neighbors(cur);
            int cont = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = cont;
        }
        int hull_nbrs = 0;
        for (int w : t.neighbors(cur))
            if (hull[w]) ++hull_nbrs;
        if (hull_nbrs == 1) {
            b.fork = cur;
            b.pend_a = t.rot_next(cur, prev);
            b.pend_b = t.rot_next(cur, b.pend_a);
            return b;
        }
        int next = -1, tth = -1;
        for (int w : t.neighbors(cur)) {
            if (w == prev) continue;
            (hull[w] ? next : tth) = w;
        }
        b.verts.push_back(cur);
        b.prev_nb.push_back(prev);
        b.next_nb.push_back(next);
        b.tooth.push_back(tth);
        b.hand.push_back(turn_hand(t, cur, prev, next));
        prev = cur;
        cur = next;
    }
}

Layout layout_triple(Tree tree) {
    const TripleRakeStats stats = triple_rake_stats(tree);
    const std::vector<char> hull = degree3_hull(tree);
    const int hub = stats.hub;

    std::array<TripleBranch, 3> br;
    for (int b = 0; b < 3; ++b)
        br[b] = triple_branch(tree, hull, hub, tree.neighbors(hub)[b]);

    const Rational eps(1, 4 * (9 - 2 * stats.short_paths + 2 * stats.double_turns));
    const Rational theta = Rational(1, 4) + eps;

    // Variables per branch: segment directions S[0..m], teeth C[0..m-1], and
    // the two fork pendants QA (first in rotation) and QB.
    std::array<int, 3> sbase, cbase, qa, qb;
    int nvars = 0;
    for (int b = 0; b < 3; ++b) {
        const int m = static_cast<int>(br[b].verts.size());
        sbase[b] = nvars;
        nvars += m + 1;
        cbase[b] = nvars;
        nvars += m;
        qa[b] = nvars++;
        qb[b] = nvars++;
    }

    DiffSystem sys(nvars);
    sys.fix(sbase[0], Rational(0));

    // The three directions at the hub sit at least theta and at most a half
    // turn apart, cyclically.
    sys.between(sbase[0], sbase[1], theta, Rational(1, 2));
    sys.between(sbase[1], sbase[2], theta, Rational(1, 2));
    sys.between(sbase[2], sbase[0], theta - Rational(1), Rational(-1, 2));

    LeafChain chain;
    for (int b = 0; b < 3; ++b) {
        const int m = static_cast<int>(br[b].verts.size());
        auto S = [&](int i) { return sbase[b] + i; };
        auto C = [&](int i) { return cbase[b] + i; };
        for (int i = 0; i < m; ++i)
            spine_vertex_constraints(sys, br[b].hand[i], S(i), S(i + 1), C(i), eps);
        // Fork: incoming reversal, first pendant, second pendant in
        // counterclockwise order with gaps of at least theta.
        sys.at_least(S(m), qa[b], Rational(1, 2) + theta);
        sys.at_least(qa[b], qb[b], theta);
        sys.at_least(qb[b], S(m), theta - Rational(3, 2));

        for (int i = 0; i < m; ++i)
            if (br[b].hand[i] == Handedness::Left) chain.add(C(i), Rational(0));
        chain.add(qa[b], Rational(0));
        chain.add(qb[b], Rational(0));
        for (int i = m - 1; i >= 0; --i)
            if (br[b].hand[i] == Handedness::Right) chain.add(C(i), Rational(1));
    }
    chain.apply(sys);

    const std::vector<Rational> x = sys.solve();

    SlopeMap map(tree, hub);
    for (int b = 0; b < 3; ++b) {
        const int m = static_cast<int>(br[b].verts.size());
        auto S = [&](int i) { return sbase[b] + i; };
        auto C = [&](int i) { return cbase[b] + i; };
        paint_ray(map, tree, hub, br[b].first_nb, TurnAngle(x[S(0)]));
        for (int i = 0; i < m; ++i)
            paint_ray(map, tree, br[b].verts[i], br[b].next_nb[i], TurnAngle(x[S(i + 1)]));
        for (int i = 0; i < m; ++i)
            paint_ray(map, tree, br[b].verts[i], br[b].tooth[i], TurnAngle(x[C(i)]));
        paint_ray(map, tree, br[b].fork, br[b].pend_a, TurnAngle(x[qa[b]]));
        paint_ray(map, tree, br[b].fork, br[b].pend_b, TurnAngle(x[qb[b]]));
    }

    Layout out;
    out.tree = std::move(tree);
    out.slope_root = hub;
    out.slopes = std::move(map);
    return out;
}

// ---------------------------------------------------------------------------
// General trees
// ---------------------------------------------------------------------------

Layout layout_general(Tree tree) {
    const int root = choose_root(tree);
    const ForkReport rep = fork_report(tree, root);
    const int f = rep.total_forks;
    if (f < 4) throw verification_error("general layout needs at least four forks");
    const Rational step(1, f);

    SlopeMap map(tree, root);
    Rational sigma(0);

    struct Frame {
        int v = -1;
        std::vector<int> kids;
        std::size_t next = 0;
        bool open = false; // a path child, possibly followed by rakes, precedes
    };
    std::vector<Frame> stack;

    {
        // The root's children form a cyclic order; start at a non-rake,
        // non-path child when one exists so that no fork spans the cut.
        // Otherwise keep the stored order and let a trailing path (possibly
        // followed by rakes) open a fork that wraps around to the front.
        Frame fr;
        fr.v = root;
        const std::vector<int>& nb = tree.neighbors(root);
        const int deg = static_cast<int>(nb.size());
        int cut = -1;
        for (int i = 0; i < deg && cut < 0; ++i)
            if (rep.classes[nb[i]] == SubtreeClass::Other) cut = i;
        if (cut >= 0) {
            for (int i = 0; i < deg; ++i) fr.kids.push_back(nb[(cut + i) % deg]);
        } else {
            fr.kids = nb;
            for (int i = deg - 1; i >= 0; --i) {
                SubtreeClass c = rep.classes[nb[i]];
                if (c == SubtreeClass::Rake) continue;
                fr.open = (c == SubtreeClass::Path);
                break;
            }
        }
        stack.push_back(std::move(fr));
    }

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.kids.size()) {
            stack.pop_back();
            continue;
        }
        const int v = top.v;
        const int child = top.kids[top.next++];
        switch (rep.classes[child]) {
            case SubtreeClass::Path:
                // A path closing a fork advances by one step; any other path
                // repeats the direction of the previous leaf.
                if (top.open) sigma = sigma + step;
                paint_ray(map, tree, v, child, TurnAngle(sigma));
                top.open = true;
                break;
            case SubtreeClass::Rake:
                draw_rake_two_slopes(map, tree, v, child, TurnAngle(sigma),
                                     TurnAngle(sigma + step), top.open);
                sigma = sigma + step;
                break;
            case SubtreeClass::Other: {
                // The subtree sweeps one step per fork it contains; its edge
                // splits that span down the middle.
                const Rational span = step * Rational(rep.subtree_forks[child]);
                set_edge(map, v, child, TurnAngle(sigma + span * Rational(1, 2)));
                top.open = false;
                Frame down;
                down.v = child;
                const std::vector<int>& nb = tree.neighbors(child);
                const int deg = static_cast<int>(nb.size());
                const int pi = tree.index_of(child, v);
                for (int s = 1; s < deg; ++s) down.kids.push_back(nb[(pi + s) % deg]);
                stack.push_back(std::move(down)); // invalidates `top`
                break;
            }
        }
    }

    if (sigma != Rational(1))
        throw verification_error("general layout did not sweep exactly one turn");

    Layout out;
    out.tree = std::move(tree);
    out.slope_root = root;
    out.slopes = std::move(map);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Public interface
// ---------------------------------------------------------------------------

void draw_rake_two_slopes(SlopeMap& map, const Tree& t, int parent, int top,
                          TurnAngle lo, TurnAngle hi, bool align_last) {
    if (lo == hi) throw verification_error("two-slope drawing needs distinct slopes");
    if (TurnAngle::gap(lo, hi).value() > Rational(1, 4))
        throw verification_error("two-slope drawing needs slopes within a quarter turn");

    int prev = parent, cur = top;
    set_edge(map, prev, cur, align_last ? hi : lo);
    while (t.degree(cur) == 2) {
        const auto& nb = t.neighbors(cur);
        int cont = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = cont;
        set_edge(map, prev, cur, align_last ? hi : lo);
    }

    while (t.degree(cur) >= 3) {
        if (t.degree(cur) > 3)
            throw verification_error("two-slope drawing needs a rake subtree");
        const int a = t.rot_next(cur, prev);
        const int b = t.rot_next(cur, a);
        const bool a_path = t.degree(ray_end(t, cur, a)) <= 1;
        const bool b_path = t.degree(ray_end(t, cur, b)) <= 1;
        if (a_path && b_path) {
            // Bottom fork: the pendant first in rotation is the first leaf of
            // the face tour, so it takes the lower slope.
            paint_ray(map, t, cur, a, lo);
            paint_ray(map, t, cur, b, hi);
            return;
        }
        if (!a_path && !b_path)
            throw verification_error("two-slope drawing needs a rake subtree");
        // Teeth first in rotation (left bends) are met on the way out and take
        // the lower slope; teeth second in rotation are met on the way back
        // and take the higher one.
        const int spine = a_path ? b : a;
        const int tooth = a_path ? a : b;
        const bool left = spine == b;
        paint_ray(map, t, cur, tooth, left ? lo : hi);
        const TurnAngle out = left ? hi : lo;
        int p = cur, c = spine;
        set_edge(map, p, c, out);
        while (t.degree(c) == 2) {
            const auto& nb = t.neighbors(c);
            int cont = nb[0] == p ? nb[1] : nb[0];
            p = c;
            c = cont;
            set_edge(map, p, c, out);
        }
        prev = p;
        cur = c;
    }
}

Tree embed_alternating_rake(const Tree& t) {
    return rake_with_hands(t, rake_skeleton(t, rake_stats(t)));
}

Tree embed_alternating_triple(const Tree& t) {
    const TripleRakeStats stats = triple_rake_stats(t);
    const std::vector<char> hull = degree3_hull(t);
    std::vector<std::vector<int>> rot;
    rot.reserve(t.n());
    for (int v = 0; v < t.n(); ++v) rot.push_back(t.neighbors(v));
    for (int b = 0; b < 3; ++b) {
        TripleBranch br = triple_branch(t, hull, stats.hub, t.neighbors(stats.hub)[b]);
        for (std::size_t i = 0; i < br.verts.size(); ++i) {
            int v = br.verts[i];
            if (i % 2 == 0)
                rot[v] = {br.prev_nb[i], br.tooth[i], br.next_nb[i]};
            else
                rot[v] = {br.prev_nb[i], br.next_nb[i], br.tooth[i]};
        }
    }
    return t.with_rotation(std::move(rot));
}

Layout assign_slopes(const Tree& t, LayoutMode mode) {
    if (t.n() == 0) throw invalid_tree_error("cannot lay out an empty tree");

    Layout out;
    switch (classify_tree(t).kind) {
        case TreeKind::Path:
            out = layout_path(t);
            break;
        case TreeKind::Rake:
            out = layout_rake(mode == LayoutMode::Free ? embed_alternating_rake(t) : t);
            break;
        case TreeKind::TripleRake:
            out = layout_triple(mode == LayoutMode::Free ? embed_alternating_triple(t) : t);
            break;
        case TreeKind::General:
            out = layout_general(mode == LayoutMode::Free ? embed_min_forks(t, choose_root(t))
                                                          : t);
            break;
    }
    out.mode = mode;
    out.classification = classify_tree(out.tree);

    if (!out.slopes.complete())
        throw verification_error("slope assignment left an edge without a direction");
    if (!check_slope_consistency(out.tree, out.slopes).empty())
        throw verification_error("slope assignment contradicts the embedding");
    if (!check_convex_faces(out.tree, out.slopes).empty())
        throw verification_error("slope assignment produced a non-convex face");

    const TurnAngle want = optimal_resolution(t, mode);
    const TurnAngle got = measure_resolution(out.tree, out.slopes);
    if (got != want)
        throw verification_error("slope assignment reached resolution " + got.str() +
                                 " turns instead of the optimal " + want.str());
    out.resolution = want;
    return out;
}

} // namespace treearch
