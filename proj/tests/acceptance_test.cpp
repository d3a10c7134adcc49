// Acceptance gate: nine end-to-end checks covering the closed-form
// resolutions, the fork-count oracles, construction validity, length
// independence, radial placement, linear-time scaling and random
// non-improvability.  One [PASS]/[FAIL] line per criterion; exit 0 only when
// all nine pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "support.hpp"
#include "treearch/classify.hpp"
#include "treearch/lengths.hpp"
#include "treearch/optimize.hpp"
#include "treearch/slopes.hpp"
#include "treearch/tree.hpp"
#include "treearch/turn_angle.hpp"
#include "treearch/verify.hpp"

using namespace treearch;
using namespace testsupport;

namespace {

// Pinned tolerances and budgets.
constexpr double kRadialDepthTol = 1e-9;       // |pos| vs depth, random trees
constexpr double kWorkedExampleTol = 1e-12;    // ray-circle worked examples
constexpr double kImprovementTolRad = 1e-9;    // perturbations may not beat optimum by more
constexpr double kBudgetSmall = 1.0;           // seconds, criteria 1 and 3
constexpr double kBudget1e5 = 1.0;             // seconds, 1e5-vertex layout
constexpr double kBudget1e6 = 10.0;            // seconds, 1e6-vertex layout
constexpr double kBudgetOracles = 600.0;       // seconds, criterion 4
constexpr double kBudgetProperty = 300.0;      // seconds, criteria 5 and 6

struct Criterion {
    bool ok = true;
    long checks = 0;
    std::string first_fail;
    std::string note;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_fail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::vector<int> depths_from(const Tree& t, int root) {
    std::vector<int> depth(t.n(), -1);
    std::vector<int> stack{root};
    depth[root] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(v))
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                stack.push_back(w);
            }
    }
    return depth;
}

// Leaves in radial order around the slope root: rotation-respecting preorder,
// children taken in rotation order starting after the parent edge.
std::vector<int> leaves_radial(const Tree& t, int root) {
    std::vector<int> leaves;
    std::vector<std::pair<int, int>> stack{{root, -1}}; // (vertex, parent)
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        if (t.degree(v) <= 1) leaves.push_back(v);
        const auto& nb = t.neighbors(v);
        const int deg = t.degree(v);
        int pi = 0;
        if (p >= 0) pi = t.index_of(v, p);
        // Push children reversed so the walk visits them in rotation order.
        std::vector<int> kids;
        for (int s = 1; s <= deg; ++s) {
            int w = nb[(pi + s) % deg];
            if (w != p) kids.push_back(w);
        }
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, v});
    }
    return leaves;
}

// Independent re-check: leaf directions weakly increase around the circle and
// close up after exactly one full turn.
bool leaf_span_one_turn(const Tree& t, const SlopeMap& slopes) {
    if (t.n() < 2) return true;
    const int root = slopes.root();
    std::vector<int> leaves = leaves_radial(t, root);
    if (leaves.size() < 2) return true;
    auto into_leaf = [&](int leaf) {
        if (leaf == root) return slopes.slope(t.neighbors(leaf)[0], leaf);
        return slopes.down(leaf);
    };
    Rational sweep(0);
    for (std::size_t i = 0; i < leaves.size(); ++i)
        sweep += TurnAngle::gap(into_leaf(leaves[i]),
                                into_leaf(leaves[(i + 1) % leaves.size()]))
                     .value();
    return sweep == Rational(1);
}

// Every fork whose closing pair brackets r rake children must span at least
// (r+1) times the resolution at the fork vertex.
void check_fork_spans(Criterion& c, const Tree& t, const SlopeMap& slopes, int root,
                      const TurnAngle& theta) {
    ForkReport rep = fork_report(t, root);
    for (const Fork& f : rep.forks) {
        Rational span;
        if (f.first_child == f.last_child) {
            span = Rational(1); // cyclic self-pair wraps the whole vertex
        } else {
            const auto& nb = t.neighbors(f.vertex);
            const int deg = t.degree(f.vertex);
            const int i = t.index_of(f.vertex, f.first_child);
            const int j = t.index_of(f.vertex, f.last_child);
            int steps = 0;
            Rational sum(0);
            for (int cur = i; cur != j; cur = (cur + 1) % deg) {
                int nxt = (cur + 1) % deg;
                sum += TurnAngle::gap(slopes.slope(f.vertex, nb[cur]),
                                      slopes.slope(f.vertex, nb[nxt]))
                           .value();
                ++steps;
            }
            c.expect(steps == f.rakes_between + 1,
                     "fork at vertex " + std::to_string(f.vertex) +
                         " brackets an unexpected edge");
            span = sum;
        }
        const Rational need = Rational(f.rakes_between + 1) * theta.value();
        c.expect(span >= need, "fork at vertex " + std::to_string(f.vertex) + " spans " +
                                   span.str() + " < " + need.str());
    }
}

// --------------------------------------------------------------------------
// 1. Embedded rake resolutions pi*(1/2 + 1/(6+2k)) for k = 0..5; free 2pi/3.
// --------------------------------------------------------------------------
Criterion criterion_rake_formulas() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k <= 5; ++k) {
        for (int tooth = 1; tooth <= 2; ++tooth) {
            const std::string pattern(k + 1, 'L');
            const Tree t = rake_tree(pattern, tooth, k % 2);
            const TreeClassification cls = classify_tree(t);
            c.expect(cls.kind == TreeKind::Rake, "pattern " + pattern + " is not a rake");
            c.expect(cls.rake.double_turns == k,
                     "pattern " + pattern + " realises k=" +
                         std::to_string(cls.rake.double_turns));

            const TurnAngle want(Rational(1, 4) + Rational(1, 2 * (6 + 2 * k)));
            const Layout fixed = assign_slopes(t, LayoutMode::FixedEmbedding);
            c.expect(fixed.resolution == want, "fixed k=" + std::to_string(k) +
                                                   " resolution " + fixed.resolution.str());
            c.expect(measure_resolution(fixed.tree, fixed.slopes) == want,
                     "fixed k=" + std::to_string(k) + " drawing off formula");

            const Layout free = assign_slopes(t, LayoutMode::Free);
            c.expect(free.resolution == TurnAngle::turns(1, 3),
                     "free rake resolution " + free.resolution.str());
            c.expect(free.resolution.pi_string() == "2π/3",
                     "free rake prints " + free.resolution.pi_string());
        }
    }
    const TurnAngle k3(Rational(1, 4) + Rational(1, 2 * (6 + 6)));
    c.expect(k3.pi_string() == "7π/12", "k=3 prints " + k3.pi_string());
    c.expect(std::abs(k3.degrees() - 105.0) == 0.0, "k=3 degrees");
    const double dt = seconds_since(t0);
    c.expect(dt < kBudgetSmall, "took " + fmt(dt) + " s");
    c.note = fmt(dt) + " s";
    return c;
}

// --------------------------------------------------------------------------
// 2. Triple-rake resolutions over the (s,d) grid, both modes.
// --------------------------------------------------------------------------
Criterion criterion_triple_formulas() {
    Criterion c;
    const std::vector<std::string> pats = {"", "L", "R", "LL", "LLL", "LLLL", "LR", "RLL"};
    std::set<std::pair<int, int>> covered;
    for (const std::string& a : pats)
        for (const std::string& b : pats)
            for (const std::string& p3 : pats) {
                const Tree t = triple_rake_tree({a, b, p3});
                const TreeClassification cls = classify_tree(t);
                if (cls.kind != TreeKind::TripleRake) {
                    c.expect(false, "arm patterns did not build a triple rake");
                    continue;
                }
                const int s = cls.triple.short_paths;
                const int d = cls.triple.double_turns;
                covered.insert({s, d});

                const TurnAngle want_fixed(Rational(1, 4) +
                                           Rational(1, 4 * (9 - 2 * s + 2 * d)));
                const TurnAngle want_free(Rational(1, 4) + Rational(1, 4 * (9 - 2 * s)));
                const Layout fixed = assign_slopes(t, LayoutMode::FixedEmbedding);
                c.expect(fixed.resolution == want_fixed,
                         "fixed (s,d)=(" + std::to_string(s) + "," + std::to_string(d) +
                             ") resolution " + fixed.resolution.str());
                const Layout free = assign_slopes(t, LayoutMode::Free);
                c.expect(free.resolution == want_free,
                         "free s=" + std::to_string(s) + " resolution " +
                             free.resolution.str());
            }
    // All realisable grid cells: d > 0 needs an arm with turns, so s < 3.
    for (int s = 0; s <= 3; ++s)
        for (int d = 0; d <= 3; ++d) {
            if (s == 3 && d > 0) continue;
            c.expect(covered.count({s, d}) == 1,
                     "grid cell (" + std::to_string(s) + "," + std::to_string(d) +
                         ") not covered");
        }
    c.note = std::to_string(covered.size()) + " (s,d) cells";
    return c;
}

// --------------------------------------------------------------------------
// 3. Embedding sensitivity: 2pi/5 with the given rotation, pi/2 re-embedded.
// --------------------------------------------------------------------------
Criterion criterion_sensitivity() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    const Tree t = embedding_sensitive_instance();

    const Layout fixed = assign_slopes(t, LayoutMode::FixedEmbedding);
    c.expect(fixed.resolution == TurnAngle::turns(1, 5),
             "fixed resolution " + fixed.resolution.str());
    c.expect(fixed.resolution.pi_string() == "2π/5",
             "fixed prints " + fixed.resolution.pi_string());

    const ForkReport rep = fork_report(t, choose_root(t));
    c.expect(rep.total_forks == 5, "f=" + std::to_string(rep.total_forks));
    c.expect(rep.total_excess == 4, "E(T)=" + std::to_string(rep.total_excess));

    const Layout free = assign_slopes(t, LayoutMode::Free);
    c.expect(free.resolution == TurnAngle::turns(1, 4),
             "free resolution " + free.resolution.str());
    c.expect(free.resolution.pi_string() == "π/2",
             "free prints " + free.resolution.pi_string());

    const double dt = seconds_since(t0);
    c.expect(dt < kBudgetSmall, "took " + fmt(dt) + " s");
    c.note = fmt(dt) + " s";
    return c;
}

// --------------------------------------------------------------------------
// 4. Fork oracles agree: exhaustive rotations == excess == greedy embedding.
// --------------------------------------------------------------------------
Criterion criterion_oracles() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(9001);

    auto check_one = [&](const Tree& t, int root) {
        const int least = brute_force_min_forks(t, root);
        const ForkReport rep = fork_report(t, root);
        c.expect(rep.total_excess == least,
                 "excess " + std::to_string(rep.total_excess) + " != brute " +
                     std::to_string(least));
        c.expect(rep.total_forks >= least, "embedding beats the brute-force minimum");
        const ForkReport best = fork_report(embed_min_forks(t, root), root);
        c.expect(best.total_forks == least,
                 "re-embedding reaches " + std::to_string(best.total_forks) +
                     " forks, brute minimum " + std::to_string(least));
    };
    auto check_general_floor = [&](const Tree& t) {
        if (classify_tree(t).kind != TreeKind::General) return;
        const ForkReport rep = fork_report(t, choose_root(t));
        c.expect(rep.total_forks >= 4, "general tree with f < 4");
        c.expect(rep.total_excess >= 4, "general tree with E(T) < 4");
    };

    long shapes = 0;
    for (int n = 1; n <= 9; ++n)
        for (const Tree& shape : all_tree_shapes(n)) {
            ++shapes;
            for (int root = 0; root < n; ++root) check_one(shape, root);
            check_general_floor(shape);
        }

    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 8); // brute force caps at n = 9
        const Tree t = shuffle_rotations(rng, random_tree(rng, n));
        check_one(t, static_cast<int>(rng() % n));
        check_general_floor(t);
    }

    const double dt = seconds_since(t0);
    c.expect(dt < kBudgetOracles, "took " + fmt(dt) + " s");
    c.note = std::to_string(shapes) + " shapes + 1000 random, " + fmt(dt) + " s";
    return c;
}

// --------------------------------------------------------------------------
// 5. Construction validity on random trees, both modes.
// --------------------------------------------------------------------------
Criterion criterion_construction() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 49);
        const Tree t = shuffle_rotations(rng, random_tree(rng, n));
        for (LayoutMode mode : {LayoutMode::FixedEmbedding, LayoutMode::Free}) {
            const Layout lay = assign_slopes(t, mode);
            c.expect(check_slope_consistency(lay.tree, lay.slopes).empty(),
                     "slope consistency violated");
            c.expect(check_convex_faces(lay.tree, lay.slopes).empty(),
                     "non-convex face");
            const TurnAngle want = optimal_resolution(t, mode);
            c.expect(lay.resolution == want, "reported resolution off");
            c.expect(measure_resolution(lay.tree, lay.slopes) == want,
                     "measured resolution " +
                         measure_resolution(lay.tree, lay.slopes).str() + " != " +
                         want.str());
            c.expect(leaf_span_one_turn(lay.tree, lay.slopes),
                     "leaf slopes do not sweep one turn");
            check_fork_spans(c, lay.tree, lay.slopes, lay.slope_root, lay.resolution);
        }
    }
    const double dt = seconds_since(t0);
    c.expect(dt < kBudgetProperty, "took " + fmt(dt) + " s");
    c.note = "1000 trees x 2 modes, " + fmt(dt) + " s";
    return c;
}

// --------------------------------------------------------------------------
// 6. Length independence: adversarial lengths never introduce a crossing.
// --------------------------------------------------------------------------
Criterion criterion_length_independence() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> logu(-2.0, 2.0);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 38);
        const Tree t = shuffle_rotations(rng, random_tree(rng, n));
        const LayoutMode mode =
            (iter % 2) ? LayoutMode::Free : LayoutMode::FixedEmbedding;
        const Layout lay = assign_slopes(t, mode);
        std::vector<double> len(t.n(), 1.0);
        for (int v = 0; v < t.n(); ++v)
            if (v != lay.slope_root) len[v] = std::pow(10.0, logu(rng));
        const Drawing d = place(lay.slopes, lay.tree, len, lay.slope_root);
        c.expect(check_planar(lay.tree, d.position).empty(),
                 "crossing with random lengths (iter " + std::to_string(iter) + ")");
    }
    const double dt = seconds_since(t0);
    c.expect(dt < kBudgetProperty, "took " + fmt(dt) + " s");
    c.note = "1000 length draws, " + fmt(dt) + " s";
    return c;
}

// --------------------------------------------------------------------------
// 7. Radial placement: depth circles and the ray-circle worked examples.
// --------------------------------------------------------------------------
Criterion criterion_radial() {
    Criterion c;
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 39);
        const Tree t = random_tree(rng, n);
        const Layout lay = assign_slopes(t, LayoutMode::Free);
        const Drawing d = place_radial(lay.slopes, lay.tree, lay.slope_root);
        const std::vector<int> depth = depths_from(lay.tree, lay.slope_root);
        for (int v = 0; v < t.n(); ++v) {
            const double r = std::hypot(d.position[v][0], d.position[v][1]);
            c.expect(std::abs(r - depth[v]) <= kRadialDepthTol,
                     "vertex " + std::to_string(v) + " off its circle by " +
                         std::to_string(std::abs(r - depth[v])));
        }
    }

    // Worked examples of the forward ray-circle intersection.
    {
        const Tree t2 = Tree::from_edges(2, {{0, 1}});
        SlopeMap m(t2, 0);
        m.set_down(1, TurnAngle());
        const Drawing d = place_radial(m, t2, 0);
        c.expect(std::abs(d.position[1][0] - 1.0) <= kWorkedExampleTol &&
                     std::abs(d.position[1][1]) <= kWorkedExampleTol,
                 "slope 0, R=1 lands off (1,0)");
    }
    {
        const Tree t3 = Tree::from_edges(3, {{0, 1}, {1, 2}});
        SlopeMap m(t3, 0);
        m.set_down(1, TurnAngle());
        m.set_down(2, TurnAngle::turns(1, 4));
        const Drawing d = place_radial(m, t3, 0);
        c.expect(std::abs(d.position[2][0] - 1.0) <= kWorkedExampleTol &&
                     std::abs(d.position[2][1] - std::sqrt(3.0)) <= kWorkedExampleTol,
                 "quarter turn from (1,0) to R=2 lands off (1,sqrt 3)");
    }
    {
        const Tree t3 = Tree::from_edges(3, {{0, 1}, {1, 2}});
        SlopeMap m(t3, 0);
        m.set_down(1, TurnAngle());
        m.set_down(2, TurnAngle::turns(1, 2));
        const Drawing d = place_radial(m, t3, 0);
        c.expect(std::abs(d.position[2][0] + 2.0) <= kWorkedExampleTol &&
                     std::abs(d.position[2][1]) <= kWorkedExampleTol,
                 "half turn from (1,0) to R=2 lands off (-2,0)");
        const double step = std::hypot(d.position[2][0] - d.position[1][0],
                                       d.position[2][1] - d.position[1][1]);
        c.expect(std::abs(step - 3.0) <= kWorkedExampleTol, "edge length is not 3");
    }
    c.note = "100 trees + 3 worked examples";
    return c;
}

// --------------------------------------------------------------------------
// 8. Linear-time scaling: large layouts with O(n) verification only.
// --------------------------------------------------------------------------
Criterion criterion_scaling() {
    Criterion c;
    std::mt19937_64 rng(808);
    auto bench = [&](int n, double budget) {
        const Tree t = random_tree(rng, n);
        const auto t0 = std::chrono::steady_clock::now();
        const Layout lay = assign_slopes(t, LayoutMode::Free);
        const Drawing d = place(lay.slopes, lay.tree, LengthStrategy::Uniform);
        const bool clean = check_slope_consistency(lay.tree, lay.slopes).empty() &&
                           check_convex_faces(lay.tree, lay.slopes).empty();
        const double dt = seconds_since(t0);
        c.expect(static_cast<int>(d.position.size()) == n, "missing positions");
        c.expect(clean, "large layout failed O(n) verification");
        c.expect(dt < budget,
                 std::to_string(n) + " vertices took " + fmt(dt) + " s (budget " +
                     fmt(budget) + " s)");
        return dt;
    };
    const double d5 = bench(100000, kBudget1e5);
    const double d6 = bench(1000000, kBudget1e6);
    c.note = "1e5: " + fmt(d5) + " s, 1e6: " + fmt(d6) + " s";
    return c;
}

// --------------------------------------------------------------------------
// 9. Random convexity-preserving perturbations never beat the optimum.
// --------------------------------------------------------------------------
Criterion criterion_non_improvability() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(909);

    std::vector<Tree> pool;
    for (int n = 2; n <= 8; ++n)
        for (const Tree& shape : all_tree_shapes(n)) pool.push_back(shape);

    long valid = 0;
    long attempts = 0;
    std::size_t next = 0;
    while (valid < 10000 && attempts < 400000) {
        const Tree& base = pool[next++ % pool.size()];
        const Tree t = (next % 3) ? shuffle_rotations(rng, base) : base;
        const LayoutMode mode = (next % 2) ? LayoutMode::Free : LayoutMode::FixedEmbedding;
        const Layout lay = assign_slopes(t, mode);
        const double best = lay.resolution.radians();

        for (int rep = 0; rep < 8 && valid < 10000; ++rep) {
            ++attempts;
            SlopeMap pert = lay.slopes;
            bool changed = false;
            for (int v = 0; v < t.n(); ++v) {
                if (v == pert.root() || (rng() & 1)) continue;
                const std::int64_t den = std::int64_t(1) << (6 + rng() % 6);
                std::int64_t num = static_cast<std::int64_t>(rng() % 31) - 15;
                if (num == 0) num = 1;
                pert.set_down(v, lay.slopes.down(v) + Rational(num, den));
                changed = true;
            }
            if (!changed) continue;
            if (!check_slope_consistency(lay.tree, pert).empty()) continue;
            if (!check_convex_faces(lay.tree, pert).empty()) continue;
            ++valid;
            const double got = measure_resolution(lay.tree, pert).radians();
            c.expect(got <= best + kImprovementTolRad,
                     "perturbation reached " + std::to_string(got) + " rad vs optimum " +
                         std::to_string(best));
        }
    }
    c.expect(valid >= 10000,
             "only " + std::to_string(valid) + " valid perturbations in " +
                 std::to_string(attempts) + " attempts");
    c.note = std::to_string(valid) + " perturbations in " + std::to_string(attempts) +
             " attempts, " + fmt(seconds_since(t0)) + " s";
    return c;
}

struct Entry {
    const char* name;
    Criterion (*run)();
};

} // namespace

int main() {
    const Entry entries[] = {
        {"rake resolution formulas (k = 0..5, free 2π/3)", criterion_rake_formulas},
        {"triple-rake resolution formulas over the (s,d) grid", criterion_triple_formulas},
        {"embedding sensitivity (2π/5 fixed vs π/2 free)", criterion_sensitivity},
        {"fork oracle equivalence (brute force == excess == re-embedding)",
         criterion_oracles},
        {"construction validity on random trees", criterion_construction},
        {"length independence under adversarial lengths", criterion_length_independence},
        {"radial placement on depth circles", criterion_radial},
        {"linear-time scaling (1e5 < 1 s, 1e6 < 10 s)", criterion_scaling},
        {"non-improvability under random perturbations", criterion_non_improvability},
    };

    int failures = 0;
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        Criterion c;
        try {
            c = e.run();
        } catch (const std::exception& ex) {
            c.ok = false;
            c.first_fail = std::string("exception: ") + ex.what();
        }
        if (c.ok) {
            std::printf("[PASS] %d. %s (%ld checks%s%s)\n", index, e.name, c.checks,
                        c.note.empty() ? "" : "; ", c.note.c_str());
        } else {
            ++failures;
            std::printf("[FAIL] %d. %s: %s\n", index, e.name, c.first_fail.c_str());
        }
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("all 9 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failures);
    return 1;
}
