#pragma once

// Shared test-only helpers: random and exhaustive tree generation plus
// builders for the specific shapes the suites exercise repeatedly.

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "treearch/tree.hpp"
#include "treearch/turn_angle.hpp"

namespace testsupport {

using treearch::Tree;

// Decodes a Pruefer sequence over n = size+2 labelled vertices into n-1 edges
// (linear pointer algorithm).
inline std::vector<std::pair<int, int>> pruefer_edges(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

struct RandomTreeOptions {
    bool label = false;   // attach labels "v0".."v{n-1}"
    bool weight = false;  // attach random weights in [0.01, 100] to every edge
};

// Uniform random labelled tree shape, renumbered to preorder with the parent
// first in every non-root rotation (the normal form the Newick parser
// produces) and children in random order.  Rooted at vertex 0.
inline Tree random_tree(std::mt19937_64& rng, int n, RandomTreeOptions opts = {}) {
    std::vector<std::vector<int>> nb(n);
    if (n >= 2) {
        std::vector<std::pair<int, int>> edges;
        if (n == 2) {
            edges = {{0, 1}};
        } else {
            std::vector<int> seq(n - 2);
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int& x : seq) x = pick(rng);
            edges = pruefer_edges(seq);
        }
        for (auto [u, v] : edges) {
            nb[u].push_back(v);
            nb[v].push_back(u);
        }
        for (auto& list : nb) std::shuffle(list.begin(), list.end(), rng);
    }

    // Preorder renumbering from root 0.
    std::vector<int> id(n, -1);
    std::vector<int> par(n, -1);
    std::vector<int> visit_order;
    visit_order.reserve(n);
    int next_id = 0;
    std::vector<std::pair<int, int>> stack{{0, -1}};
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        id[v] = next_id++;
        par[v] = p;
        visit_order.push_back(v);
        for (auto it = nb[v].rbegin(); it != nb[v].rend(); ++it)
            if (*it != p) stack.emplace_back(*it, v);
    }

    std::vector<std::vector<int>> adj(n);
    std::unordered_map<std::uint64_t, double> weights;
    std::uniform_real_distribution<double> wdist(0.01, 100.0);
    for (int v : visit_order) {
        int nv = id[v];
        if (par[v] >= 0) {
            adj[nv].push_back(id[par[v]]);
            if (opts.weight) weights[Tree::edge_key(id[par[v]], nv)] = wdist(rng);
        }
        for (int w : nb[v])
            if (w != par[v]) adj[nv].push_back(id[w]);
    }
    std::vector<std::string> labels;
    if (opts.label) {
        labels.resize(n);
        for (int v = 0; v < n; ++v) labels[v] = "v" + std::to_string(v);
    }
    return Tree(std::move(adj), std::move(labels), 0, std::move(weights));
}

// Same tree, every rotation list independently reshuffled (parent position
// arbitrary).
inline Tree shuffle_rotations(std::mt19937_64& rng, const Tree& t) {
    std::vector<std::vector<int>> adj(t.n());
    for (int v = 0; v < t.n(); ++v) {
        adj[v] = t.neighbors(v);
        std::shuffle(adj[v].begin(), adj[v].end(), rng);
    }
    return t.with_rotation(std::move(adj));
}

namespace detail {

struct Builder {
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> deferred;

    int add_vertex() {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    }
    void link(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // Spine step with an optional tooth.  The rotation convention is
    // counterclockwise lists, so a left turn reads (prev, tooth, next): the
    // tooth is linked before the outgoing spine edge for 'L' and after every
    // spine edge exists for 'R' (via `deferred`).
    int turn_vertex(int prev, char hand, int tooth_len) {
        int v = add_vertex();
        link(prev, v);
        int tooth = add_vertex();
        int tip = tooth;
        for (int i = 1; i < tooth_len; ++i) {
            int w = add_vertex();
            link(tip, w);
            tip = w;
        }
        if (hand == 'L')
            link(v, tooth);
        else
            deferred.emplace_back(v, tooth);
        return v;
    }
    int straight_run(int from, int count) {
        for (int i = 0; i < count; ++i) {
            int v = add_vertex();
            link(from, v);
            from = v;
        }
        return from;
    }
    Tree finish() {
        for (auto [v, tooth] : deferred) link(v, tooth);
        return Tree(std::move(adj));
    }
};

} // namespace detail

// Caterpillar of maximum degree three whose turn sequence -- the bends at the
// degree-3 vertices interior to the path through all degree-3 vertices, read
// from the lower-id end -- is exactly `pattern` ('L' / 'R').  Two sentinel
// degree-3 vertices delimit that path so every pattern character sits in its
// interior.  `tooth_len` edges per pendant tooth; `spacing` extra straight
// spine vertices between consecutive degree-3 vertices.
inline Tree rake_tree(const std::string& pattern, int tooth_len = 1, int spacing = 0) {
    detail::Builder b;
    int cur = b.add_vertex(); // spine end, a leaf
    std::string full = "L" + pattern + "L";
    for (char hand : full) {
        cur = b.straight_run(cur, spacing);
        cur = b.turn_vertex(cur, hand, tooth_len);
    }
    cur = b.straight_run(cur, spacing + 1); // other spine end
    return b.finish();
}

// Three arms joined at a degree-3 hub (vertex 0).  Arm i realises the turn
// sequence patterns[i], read hub-outward, and ends in a degree-3 vertex with
// two pendant leaves so that the whole arm spine survives leaf pruning.  An
// empty pattern makes the arm a short path.
inline Tree triple_rake_tree(const std::array<std::string, 3>& patterns, int tooth_len = 1,
                             int spacing = 0) {
    detail::Builder b;
    int hub = b.add_vertex();
    for (const std::string& pattern : patterns) {
        int cur = hub;
        for (char hand : pattern) {
            cur = b.straight_run(cur, spacing);
            cur = b.turn_vertex(cur, hand, tooth_len);
        }
        cur = b.straight_run(cur, spacing);
        int fork = b.add_vertex();
        b.link(cur, fork);
        b.link(fork, b.add_vertex());
        b.link(fork, b.add_vertex());
    }
    return b.finish();
}

// Star with `legs` pendant paths of the given length hanging off vertex 0.
inline Tree spider_tree(int legs, int leg_len = 1) {
    detail::Builder b;
    int hub = b.add_vertex();
    for (int i = 0; i < legs; ++i) b.straight_run(hub, leg_len);
    return b.finish();
}

// Union of the vertex sets of all paths between degree-3 vertices, found by
// explicit BFS walks: an independent reference for the pruning-based hull.
inline std::vector<char> brute_hull(const Tree& t) {
    const int n = t.n();
    std::vector<int> d3;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 3) d3.push_back(v);
    std::vector<char> in(n, 0);
    for (int a : d3) {
        std::vector<int> par(n, -2);
        std::vector<int> queue{a};
        par[a] = -1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : t.neighbors(queue[qi]))
                if (par[w] == -2) {
                    par[w] = queue[qi];
                    queue.push_back(w);
                }
        for (int b : d3)
            for (int v = b; v != -1; v = par[v]) in[v] = 1;
    }
    return in;
}

// Literal reading of the caterpillar test: maximum degree exactly three and
// no vertex of the degree-3 hull meets three hull edges.
inline bool brute_is_rake(const Tree& t) {
    int maxdeg = 0;
    for (int v = 0; v < t.n(); ++v) maxdeg = std::max(maxdeg, t.degree(v));
    if (maxdeg != 3) return false;
    std::vector<char> hull = brute_hull(t);
    for (int v = 0; v < t.n(); ++v) {
        if (!hull[v]) continue;
        int d = 0;
        for (int w : t.neighbors(v))
            if (hull[w]) ++d;
        if (d >= 3) return false;
    }
    return true;
}

inline int brute_hull_branch_count(const Tree& t) {
    std::vector<char> hull = brute_hull(t);
    int count = 0;
    for (int v = 0; v < t.n(); ++v) {
        if (!hull[v]) continue;
        int d = 0;
        for (int w : t.neighbors(v))
            if (hull[w]) ++d;
        if (d >= 3) ++count;
    }
    return count;
}

// Window oracle for convex arches: some rotation must place every direction
// inside a half-turn window in nondecreasing order.
inline bool brute_is_convex_arch(const std::vector<treearch::TurnAngle>& dirs) {
    using treearch::Rational;
    using treearch::TurnAngle;
    const Rational half(1, 2);
    for (const TurnAngle& base : dirs) {
        bool ok = true;
        bool first = true;
        Rational prev(0);
        for (const TurnAngle& d : dirs) {
            Rational lift = TurnAngle::gap(base, d).value();
            if (lift > half || (!first && lift < prev)) {
                ok = false;
                break;
            }
            prev = lift;
            first = false;
        }
        if (ok) return true;
    }
    return false;
}

// Rooted AHU code with sorted child codes; isomorphism-invariant.
inline std::string ahu_code(const std::vector<std::vector<int>>& nb, int v, int parent) {
    std::vector<std::string> parts;
    for (int w : nb[v])
        if (w != parent) parts.push_back(ahu_code(nb, w, v));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const std::string& p : parts) s += p;
    s += ")";
    return s;
}

// Canonical code of a free tree: AHU at the centroid, or at the centroid edge
// when there are two centroids.
inline std::string shape_canon(const std::vector<std::vector<int>>& nb) {
    const int n = static_cast<int>(nb.size());
    if (n == 1) return "()";
    std::vector<int> par(n, -2), order, size(n, 1);
    order.reserve(n);
    std::vector<int> stack{0};
    par[0] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : nb[v])
            if (w != par[v]) {
                par[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (par[*it] >= 0) size[par[*it]] += size[*it];
    std::vector<int> centroids;
    int best = n + 1;
    for (int v = 0; v < n; ++v) {
        int worst = v == 0 ? 0 : n - size[v];
        for (int w : nb[v])
            if (w != par[v]) worst = std::max(worst, size[w]);
        if (worst < best) {
            best = worst;
            centroids = {v};
        } else if (worst == best) {
            centroids.push_back(v);
        }
    }
    if (centroids.size() == 1) return ahu_code(nb, centroids[0], -1);
    std::string a = ahu_code(nb, centroids[0], centroids[1]);
    std::string b = ahu_code(nb, centroids[1], centroids[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

// Renumbers an adjacency structure to preorder from `root`, parent first in
// every non-root rotation and children kept in listed order.
inline Tree normalize_preorder(const std::vector<std::vector<int>>& nb, int root = 0) {
    const int n = static_cast<int>(nb.size());
    std::vector<int> id(n, -1), par(n, -2), visit;
    visit.reserve(n);
    int next_id = 0;
    std::vector<std::pair<int, int>> stack{{root, -1}};
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        id[v] = next_id++;
        par[v] = p;
        visit.push_back(v);
        for (auto it = nb[v].rbegin(); it != nb[v].rend(); ++it)
            if (*it != p) stack.emplace_back(*it, v);
    }
    std::vector<std::vector<int>> adj(n);
    for (int v : visit) {
        if (par[v] >= 0) adj[id[v]].push_back(id[par[v]]);
        for (int w : nb[v])
            if (w != par[v]) adj[id[v]].push_back(id[w]);
    }
    return Tree(std::move(adj), {}, 0);
}

// Every tree shape on n vertices up to isomorphism (1 1 1 2 3 6 11 23 47 for
// n = 1..9), via exhaustive Pruefer sequences deduplicated by canonical code.
inline std::vector<Tree> all_tree_shapes(int n) {
    std::vector<Tree> out;
    if (n <= 1) {
        out.emplace_back(std::vector<std::vector<int>>(1), std::vector<std::string>{}, 0);
        return out;
    }
    std::set<std::string> seen;
    auto consider = [&](const std::vector<std::pair<int, int>>& edges) {
        std::vector<std::vector<int>> nb(n);
        for (auto [u, v] : edges) {
            nb[u].push_back(v);
            nb[v].push_back(u);
        }
        if (seen.insert(shape_canon(nb)).second) out.push_back(normalize_preorder(nb));
    };
    if (n == 2) {
        consider({{0, 1}});
        return out;
    }
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        consider(pruefer_edges(seq));
        std::size_t i = 0;
        while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
        if (i == seq.size()) break;
        ++seq[i];
    }
    return out;
}

// Tree whose given embedding needs five forks while a re-embedding needs only
// four: root 0 has three leaf children and one child u = 1 whose own children
// are leaf, leaf, and a 3-leaf star in that order.  Swapping u's middle
// children removes the fork at u.
inline Tree embedding_sensitive_instance() {
    std::vector<std::vector<int>> adj{
        {2, 3, 4, 1},  // root 0: three leaf children, then the deep child 1
        {0, 5, 6, 7},  // child order path, path, star: one avoidable fork
        {0},
        {0},
        {0},
        {1},
        {1},
        {1, 8, 9, 10},  // star of three leaves: two unavoidable forks
        {7},
        {7},
        {7},
    };
    return Tree(std::move(adj), {}, 0);
}

} // namespace testsupport
